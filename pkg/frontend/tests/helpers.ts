/** Test doubles shared by the front-end suites. */

import type { LintApi, LintRequest } from '../src/api.js';
import type { Diagnostic, LintResponse, Profile, RulesResponse } from '../src/types.js';

export const CATALOG: RulesResponse = {
	version: '0.1.0',
	profiles: {
		artext: ['a1', 'a3', 'a4', 'a6', 'b4', 'c6'],
		lengclaro: ['a1', 'a4', 'a5', 'b4', 'c9'],
	},
	thresholds: { long_paragraph_words: 135 },
	rules: [
		{
			id: 'b4',
			category: 'morphosyntactic',
			description: 'Futuro de subjuntivo (forma arcaica)',
			thresholds: [],
			default_enabled: { artext: true, lengclaro: true },
		},
	],
};

export function diagnostic(overrides: Partial<Diagnostic> = {}): Diagnostic {
	return {
		rule_id: 'b4',
		category: 'morphosyntactic',
		severity: 'warn',
		span: { start: 0, end: 1 },
		source_span: null,
		message: 'forma arcaica',
		suggestions: [],
		snippet: '',
		...overrides,
	};
}

interface Recorded {
	request: LintRequest;
}

/**
 * Scriptable service double: responds to each lint call with the next
 * queued reply (or via a function of the request text). Requests are
 * recorded; replies can be deferred to exercise supersede behaviour.
 */
export class FakeService implements LintApi {
	calls: Recorded[] = [];
	private queue: Array<(request: LintRequest) => LintResponse> = [];
	private pending: Array<{ run: () => void; signal?: AbortSignal }> = [];
	defer = false;

	reply(fn: (request: LintRequest) => Diagnostic[]): void {
		this.queue.push((request) => ({
			version: '0.1.0',
			profile: request.profile,
			diagnostics: fn(request),
		}));
	}

	async lint(request: LintRequest, signal?: AbortSignal): Promise<LintResponse> {
		this.calls.push({ request });
		const producer = this.queue.shift();
		if (!producer) throw new Error('FakeService: no queued reply');
		if (!this.defer) return producer(request);
		return new Promise((resolve, reject) => {
			signal?.addEventListener('abort', () =>
				reject(new DOMException('aborted', 'AbortError')),
			);
			this.pending.push({ run: () => resolve(producer(request)), signal });
		});
	}

	/** Resolve every deferred reply that was not aborted. */
	flush(): void {
		for (const item of this.pending.splice(0)) {
			if (!item.signal?.aborted) item.run();
		}
	}

	async rules(): Promise<RulesResponse> {
		return CATALOG;
	}
}

export function b4Response(text: string): Diagnostic[] {
	const start = text.indexOf('solicitare');
	if (start < 0) return [];
	return [
		diagnostic({
			span: { start, end: start + 'solicitare'.length },
			message: '«solicitare» es futuro de subjuntivo, una forma arcaica',
			suggestions: ['solicitase'],
			snippet: 'solicitare',
		}),
	];
}

export const B4_SENTENCE =
	'La inexistencia de vínculos de parentesco entre todos o parte de los ' +
	'convivientes cuando uno de ellos solicitare el ingreso mínimo vital.';
