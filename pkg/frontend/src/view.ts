// Pure view-model helpers (DOM-free, unit-tested).

import type { CandidateRow, ParameterCandidates, QueryResponse, ResultRow } from "./api.js";

export interface FileGroup {
  file: string;
  rows: ResultRow[];
}

export function groupResultsByFile(rows: ResultRow[]): FileGroup[] {
  const groups: FileGroup[] = [];
  const byFile = new Map<string, FileGroup>();
  for (const row of rows) {
    let group = byFile.get(row.file);
    if (!group) {
      group = { file: row.file, rows: [] };
      byFile.set(row.file, group);
      groups.push(group);
    }
    group.rows.push(row);
  }
  return groups;
}

export type BannerKind = "ok" | "not-understood" | "error";

export interface Banner {
  kind: BannerKind;
  text: string;
}

export function statusBanner(response: QueryResponse): Banner {
  if (response.status !== "UNDERSTOOD") {
    return { kind: "not-understood", text: "query not understood" };
  }
  if (response.search_error) {
    return { kind: "error", text: `translated, but not searchable: ${response.search_error}` };
  }
  const count = response.results.length;
  const suffix = response.truncated ? " (truncated)" : "";
  return { kind: "ok", text: `${count} result${count === 1 ? "" : "s"}${suffix}` };
}

export function sortCandidates(
  rows: CandidateRow[],
  direction: "asc" | "desc",
): CandidateRow[] {
  const sorted = [...rows].sort((a, b) => a.probability - b.probability);
  if (direction === "desc") {
    sorted.reverse();
  }
  return sorted;
}

export function nonEmptyCandidateGroups(
  groups: ParameterCandidates[],
): ParameterCandidates[] {
  return groups.filter((group) => group.candidates.length > 0);
}
