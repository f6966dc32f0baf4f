// Text rendering shared between the feedback area and result rows.
// The triple line must stay byte-identical with the CLI header: the
// parity fixture in tests/fixtures pins both sides.

import type { CandidateRow, Elected, ResultRow } from "./api.js";

export function formatTriple(elected: Elected): string {
  return `${elected.kind} ${elected.context} ${elected.identifier}`;
}

export function formatProbability(row: CandidateRow): string {
  return `p=${String(row.probability)} (${row.fraction})`;
}

export function formatCandidate(row: CandidateRow): string {
  return `'${row.words.join(" ")}'  ${formatProbability(row)}  ${row.source}`;
}

export function formatLocation(row: ResultRow): string {
  return `${row.file}:${row.line}:${row.column}`;
}

export function formatResultRow(row: ResultRow): string {
  return `${formatLocation(row)}  ${row.kind}/${row.context}  ${row.name}  ${row.snippet.trim()}`;
}
