// Typed client for the nlquery JSON API.

export interface Elected {
  kind: string;
  context: string;
  identifier: string;
}

export interface CandidateRow {
  words: string[];
  probability: number;
  fraction: string;
  source: string;
}

export interface ParameterCandidates {
  parameter: string;
  candidates: CandidateRow[];
}

export interface ResultRow {
  file: string;
  line: number;
  column: number;
  kind: string;
  context: string;
  name: string;
  enclosing: string;
  snippet: string;
}

export interface QueryResponse {
  status: string;
  elected: Elected;
  form: string;
  match_count: number;
  candidates: ParameterCandidates[];
  trace: string[];
  results: ResultRow[];
  truncated: boolean;
  search_error: string | null;
}

export async function postQuery(query: string, baseUrl = ""): Promise<QueryResponse> {
  const res = await fetch(`${baseUrl}/api/query`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify({ query }),
  });
  if (!res.ok) {
    const text = await res.text().catch(() => "");
    throw new Error(`HTTP ${res.status}${text ? `: ${text}` : ""}`);
  }
  return (await res.json()) as QueryResponse;
}
