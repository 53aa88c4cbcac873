/**
 * Editor state machine, independent of the DOM so the revise loop is
 * unit-testable.
 *
 * Invariant: `diagnostics` always describe `checkedText`. Any edit clears
 * them and raises the dirty flag until the next successful check. A newer
 * check supersedes (aborts) an older in-flight one.
 */

import type { LintApi } from './api.js';
import type { Diagnostic, Profile, RulesResponse } from './types.js';

export interface Snapshot {
	text: string;
	checkedText: string | null;
	diagnostics: Diagnostic[];
	visible: Diagnostic[];
	profile: Profile;
	hiddenRules: ReadonlySet<string>;
	dirty: boolean;
	checking: boolean;
	error: string | null;
	catalog: RulesResponse | null;
}

type Listener = (snapshot: Snapshot) => void;

export class EditorState {
	private text = '';
	private checkedText: string | null = null;
	private diagnostics: Diagnostic[] = [];
	private profile: Profile = 'lengclaro';
	private hiddenRules = new Set<string>();
	private checking = false;
	private error: string | null = null;
	private catalog: RulesResponse | null = null;
	private inflight: AbortController | null = null;
	private generation = 0;
	private listeners: Listener[] = [];

	constructor(private readonly client: LintApi) {}

	subscribe(listener: Listener): () => void {
		this.listeners.push(listener);
		listener(this.snapshot());
		return () => {
			this.listeners = this.listeners.filter((l) => l !== listener);
		};
	}

	snapshot(): Snapshot {
		return {
			text: this.text,
			checkedText: this.checkedText,
			diagnostics: [...this.diagnostics],
			visible: this.visibleDiagnostics(),
			profile: this.profile,
			hiddenRules: new Set(this.hiddenRules),
			dirty: this.checkedText !== null && this.text !== this.checkedText,
			checking: this.checking,
			error: this.error,
			catalog: this.catalog,
		};
	}

	/** Text change: stale highlights are cleared immediately. */
	edit(text: string): void {
		if (text === this.text) return;
		this.text = text;
		if (this.diagnostics.length > 0) this.diagnostics = [];
		this.emit();
	}

	/** Send the current text for checking; supersedes any older request. */
	async check(): Promise<void> {
		this.inflight?.abort();
		const controller = new AbortController();
		this.inflight = controller;
		const generation = ++this.generation;
		const submitted = this.text;
		this.checking = true;
		this.error = null;
		this.emit();
		try {
			const response = await this.client.lint(
				{ text: submitted, profile: this.profile },
				controller.signal,
			);
			if (generation !== this.generation) return; // superseded
			this.checkedText = submitted;
			this.diagnostics = response.diagnostics;
		} catch (err) {
			if (generation !== this.generation) return;
			if (err instanceof DOMException && err.name === 'AbortError') return;
			this.error = err instanceof Error ? err.message : String(err);
		} finally {
			if (generation === this.generation) {
				this.checking = false;
				this.inflight = null;
				this.emit();
			}
		}
	}

	/**
	 * Replace a diagnostic's span with one of its suggestions. Only valid
	 * while the text is unedited since the last check; the result is a fresh
	 * edit (highlights clear, dirty until the next check).
	 */
	applySuggestion(diagnostic: Diagnostic, suggestion: string): void {
		if (this.checkedText === null || this.text !== this.checkedText) return;
		const { start, end } = diagnostic.span;
		const next = this.text.slice(0, start) + suggestion + this.text.slice(end);
		this.edit(next);
	}

	/** Switching profile never mutates the text. */
	setProfile(profile: Profile): void {
		if (profile === this.profile) return;
		this.profile = profile;
		this.emit();
	}

	toggleRule(ruleId: string): void {
		if (this.hiddenRules.has(ruleId)) this.hiddenRules.delete(ruleId);
		else this.hiddenRules.add(ruleId);
		this.emit();
	}

	async loadCatalog(): Promise<void> {
		try {
			this.catalog = await this.client.rules();
			this.error = null;
		} catch (err) {
			this.error = err instanceof Error ? err.message : String(err);
		}
		this.emit();
	}

	/** Diagnostics after per-rule toggles and the profile's rule set. */
	private visibleDiagnostics(): Diagnostic[] {
		const enabled = this.catalog
			? new Set(this.catalog.profiles[this.profile])
			: null;
		return this.diagnostics.filter(
			(d) =>
				!this.hiddenRules.has(d.rule_id) &&
				(enabled === null || enabled.has(d.rule_id)),
		);
	}

	private emit(): void {
		const snapshot = this.snapshot();
		for (const listener of this.listeners) listener(snapshot);
	}
}
