/** Wire types mirroring the service's JSON contract. */

export type Profile = 'artext' | 'lengclaro';

export interface Span {
	start: number;
	end: number;
}

export interface Diagnostic {
	rule_id: string;
	category: string;
	severity: 'warn' | 'info';
	span: Span;
	source_span: Span | null;
	message: string;
	suggestions: string[];
	snippet: string;
}

export interface LintResponse {
	version: string;
	profile: string;
	diagnostics: Diagnostic[];
}

export interface RuleInfo {
	id: string;
	category: string;
	description: string;
	thresholds: string[];
	default_enabled: Record<Profile, boolean>;
}

export interface RulesResponse {
	version: string;
	profiles: Record<Profile, string[]>;
	thresholds: Record<string, number>;
	rules: RuleInfo[];
}
