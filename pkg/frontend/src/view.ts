/**
 * DOM wiring: textarea over a highlight backdrop, a category-grouped side
 * panel with suggestion chips, profile switcher and error banner.
 *
 * Highlights are rendered from the last-checked text only; as soon as the
 * user edits, the backdrop falls back to plain text until the next check.
 */

import { segments } from './highlight.js';
import { EditorState, Snapshot } from './state.js';
import type { Diagnostic, Profile } from './types.js';

const CATEGORY_LABELS: Record<string, string> = {
	discourse: 'Discurso',
	morphosyntactic: 'Morfosintaxis',
	lexical: 'Léxico',
	orthography: 'Ortografía',
};

export function buildApp(root: HTMLElement, state: EditorState): void {
	root.innerHTML = `
		<header class="toolbar">
			<label>Perfil
				<select data-role="profile">
					<option value="lengclaro">lengclaro</option>
					<option value="artext">artext</option>
				</select>
			</label>
			<button type="button" data-role="check">Revisar el texto</button>
			<span class="dirty" data-role="dirty" hidden>Texto modificado; vuelva a revisar</span>
			<span class="status" data-role="status"></span>
		</header>
		<div class="banner" data-role="banner" hidden></div>
		<main class="workspace">
			<div class="editor">
				<div class="backdrop" aria-hidden="true"><pre data-role="marks"></pre></div>
				<textarea data-role="input" spellcheck="false"
					placeholder="Pegue aquí el texto administrativo…"></textarea>
			</div>
			<aside class="panel" data-role="panel"></aside>
		</main>`;

	const input = query<HTMLTextAreaElement>(root, 'input');
	const marks = query<HTMLElement>(root, 'marks');
	const panel = query<HTMLElement>(root, 'panel');
	const banner = query<HTMLElement>(root, 'banner');
	const dirty = query<HTMLElement>(root, 'dirty');
	const status = query<HTMLElement>(root, 'status');
	const profile = query<HTMLSelectElement>(root, 'profile');
	const checkButton = query<HTMLButtonElement>(root, 'check');

	input.addEventListener('input', () => state.edit(input.value));
	input.addEventListener('scroll', () => {
		marks.parentElement!.scrollTop = input.scrollTop;
		marks.parentElement!.scrollLeft = input.scrollLeft;
	});
	checkButton.addEventListener('click', () => void state.check());
	profile.addEventListener('change', () => {
		state.setProfile(profile.value as Profile);
		void state.loadCatalog();
	});

	state.subscribe((snapshot) => {
		if (input.value !== snapshot.text) input.value = snapshot.text;
		profile.value = snapshot.profile;
		renderMarks(marks, snapshot);
		renderPanel(panel, snapshot, state, input);
		banner.hidden = snapshot.error === null;
		banner.textContent = snapshot.error ?? '';
		dirty.hidden = !snapshot.dirty;
		status.textContent = snapshot.checking ? 'Revisando…' : '';
		checkButton.disabled = snapshot.checking;
	});
}

function renderMarks(target: HTMLElement, snapshot: Snapshot): void {
	target.textContent = '';
	const showHighlights =
		snapshot.checkedText !== null && !snapshot.dirty && snapshot.visible.length > 0;
	if (!showHighlights) {
		target.append(document.createTextNode(snapshot.text));
		return;
	}
	for (const segment of segments(snapshot.checkedText!, snapshot.visible)) {
		if (segment.diagnostic === null) {
			target.append(document.createTextNode(segment.text));
		} else {
			const mark = document.createElement('mark');
			mark.className = `cat-${segment.diagnostic.category} sev-${segment.diagnostic.severity}`;
			mark.dataset.rule = segment.diagnostic.rule_id;
			mark.textContent = segment.text;
			target.append(mark);
		}
	}
}

function renderPanel(
	target: HTMLElement,
	snapshot: Snapshot,
	state: EditorState,
	input: HTMLTextAreaElement,
): void {
	target.textContent = '';
	if (snapshot.visible.length === 0) {
		const empty = document.createElement('p');
		empty.className = 'empty';
		empty.textContent =
			snapshot.checkedText === null
				? 'Pulse «Revisar el texto» para obtener recomendaciones.'
				: 'Sin recomendaciones.';
		target.append(empty);
		return;
	}
	const byCategory = new Map<string, Diagnostic[]>();
	for (const diagnostic of snapshot.visible) {
		const bucket = byCategory.get(diagnostic.category) ?? [];
		bucket.push(diagnostic);
		byCategory.set(diagnostic.category, bucket);
	}
	for (const [category, diagnostics] of byCategory) {
		const section = document.createElement('section');
		section.dataset.category = category;
		const title = document.createElement('h2');
		title.textContent = `${CATEGORY_LABELS[category] ?? category} (${diagnostics.length})`;
		section.append(title);
		for (const diagnostic of diagnostics) {
			section.append(renderEntry(diagnostic, snapshot, state, input));
		}
		target.append(section);
	}
}

function renderEntry(
	diagnostic: Diagnostic,
	snapshot: Snapshot,
	state: EditorState,
	input: HTMLTextAreaElement,
): HTMLElement {
	const entry = document.createElement('article');
	entry.className = `entry sev-${diagnostic.severity}`;
	entry.dataset.rule = diagnostic.rule_id;

	const head = document.createElement('button');
	head.type = 'button';
	head.className = 'entry-head';
	head.textContent = `${diagnostic.rule_id} · ${diagnostic.message}`;
	head.addEventListener('click', () => {
		input.focus();
		input.setSelectionRange(diagnostic.span.start, diagnostic.span.end);
	});
	entry.append(head);

	if (diagnostic.suggestions.length > 0 && !snapshot.dirty) {
		const chips = document.createElement('div');
		chips.className = 'chips';
		for (const suggestion of diagnostic.suggestions) {
			const chip = document.createElement('button');
			chip.type = 'button';
			chip.className = 'chip';
			chip.textContent = suggestion;
			chip.addEventListener('click', () => state.applySuggestion(diagnostic, suggestion));
			chips.append(chip);
		}
		entry.append(chips);
	}
	return entry;
}

function query<T extends HTMLElement>(root: HTMLElement, role: string): T {
	const found = root.querySelector(`[data-role="${role}"]`);
	if (!found) throw new Error(`missing element: ${role}`);
	return found as T;
}
