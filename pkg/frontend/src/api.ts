/** Thin client for the two service endpoints the editor consumes. */

import type { LintResponse, Profile, RulesResponse } from './types.js';

export interface LintRequest {
	text: string;
	profile: Profile;
	rules?: string[];
	overrides?: Record<string, number>;
}

export class ServiceError extends Error {
	constructor(
		message: string,
		readonly status: number | null = null,
	) {
		super(message);
	}
}

/** What the editor needs from the service; LintClient is the HTTP one. */
export interface LintApi {
	lint(request: LintRequest, signal?: AbortSignal): Promise<LintResponse>;
	rules(): Promise<RulesResponse>;
}

export class LintClient implements LintApi {
	constructor(
		readonly baseUrl: string,
		private readonly fetchImpl: typeof fetch = fetch,
	) {}

	async lint(request: LintRequest, signal?: AbortSignal): Promise<LintResponse> {
		const response = await this.request('/lint', {
			method: 'POST',
			body: JSON.stringify(request),
			headers: { 'Content-Type': 'application/json' },
			signal,
		});
		return (await response.json()) as LintResponse;
	}

	async rules(): Promise<RulesResponse> {
		const response = await this.request('/rules', { method: 'GET' });
		return (await response.json()) as RulesResponse;
	}

	private async request(path: string, init: RequestInit): Promise<Response> {
		let response: Response;
		try {
			response = await this.fetchImpl(this.baseUrl + path, init);
		} catch (err) {
			if (err instanceof DOMException && err.name === 'AbortError') throw err;
			throw new ServiceError(`no se pudo contactar con el servicio: ${String(err)}`);
		}
		if (!response.ok) {
			let detail = `HTTP ${response.status}`;
			try {
				const body = (await response.json()) as { error?: string };
				if (body.error) detail = body.error;
			} catch {
				// non-JSON error body: keep the status line
			}
			throw new ServiceError(detail, response.status);
		}
		return response;
	}
}
