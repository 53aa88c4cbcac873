/**
 * Split checked text into render segments. Lossless by construction: the
 * concatenation of all segment texts equals the input text. Overlapping
 * diagnostics split at every span boundary; each piece is attributed to the
 * first covering diagnostic (input order, i.e. the engine's canonical
 * ordering).
 */

import type { Diagnostic } from './types.js';

export interface Segment {
	text: string;
	diagnostic: Diagnostic | null;
}

export function segments(text: string, diagnostics: Diagnostic[]): Segment[] {
	const bounds = new Set<number>([0, text.length]);
	for (const d of diagnostics) {
		bounds.add(clamp(d.span.start, text.length));
		bounds.add(clamp(d.span.end, text.length));
	}
	const points = [...bounds].sort((a, b) => a - b);
	const out: Segment[] = [];
	for (let i = 0; i + 1 < points.length; i++) {
		const [start, end] = [points[i], points[i + 1]];
		if (start === end) continue;
		const covering =
			diagnostics.find((d) => d.span.start <= start && end <= d.span.end) ?? null;
		out.push({ text: text.slice(start, end), diagnostic: covering });
	}
	if (text.length === 0) return [];
	return out;
}

function clamp(offset: number, max: number): number {
	return Math.max(0, Math.min(offset, max));
}
