// Query console: query field, interpretation feedback area, result area.

import { postQuery, type QueryResponse } from "./api.js";
import { formatCandidate, formatLocation, formatTriple } from "./format.js";
import {
  groupResultsByFile,
  nonEmptyCandidateGroups,
  sortCandidates,
  statusBanner,
} from "./view.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const form = byId<HTMLFormElement>("query-form");
const input = byId<HTMLInputElement>("query-input");
const submit = byId<HTMLButtonElement>("query-submit");
const feedback = byId<HTMLDivElement>("feedback");
const resultsArea = byId<HTMLDivElement>("results");
const historyList = byId<HTMLUListElement>("history");

let pending = false;
let probabilitySort: "asc" | "desc" = "desc";
let lastResponse: QueryResponse | null = null;

function setPending(value: boolean): void {
  pending = value;
  input.disabled = value;
  submit.disabled = value || input.value.trim() === "";
}

input.addEventListener("input", () => {
  submit.disabled = pending || input.value.trim() === "";
});

function renderError(message: string): void {
  feedback.replaceChildren(el("div", "banner error", message));
  resultsArea.replaceChildren();
}

function renderCandidates(response: QueryResponse): HTMLElement {
  const container = el("div", "candidates");
  const heading = el("h3", undefined, "candidates");
  const sortButton = el("button", "sort", `probability ${probabilitySort === "desc" ? "↓" : "↑"}`);
  sortButton.type = "button";
  sortButton.addEventListener("click", () => {
    probabilitySort = probabilitySort === "desc" ? "asc" : "desc";
    if (lastResponse)

      render(lastResponse);
  });
  heading.append(" ", sortButton);
  container.append(heading);
  for (const group of nonEmptyCandidateGroups(response.candidates)) {
    const block = el("div", "candidate-group");
    block.append(el("h4", undefined, group.parameter));
    const list = el("ul");
    for (const row of sortCandidates(group.candidates, probabilitySort)) {
      list.append(el("li", "mono", formatCandidate(row)));
    }
    block.append(list);
    container.append(block);
  }
  return container;
}

function renderTrace(response: QueryResponse): HTMLElement {
  const details = el("details", "trace");
  details.append(el("summary", undefined, `rule trace (${response.trace.length} steps)`));
  const list = el("ol");
  for (const line of response.trace) {
    list.append(el("li", "mono", line));
  }
  details.append(list);
  return details;
}

function render(response: QueryResponse): void {
  lastResponse = response;
  const banner = statusBanner(response);
  feedback.replaceChildren(
    el("div", `banner ${banner.kind}`, banner.text),
    el("div", "triple mono", formatTriple(response.elected)),
    renderCandidates(response),
    renderTrace(response),
  );

  resultsArea.replaceChildren();
  if (response.status !== "UNDERSTOOD") {
    return;
  }
  for (const group of groupResultsByFile(response.results)) {
    const section = el("section", "file-group");
    section.append(el("h3", "mono", group.file));
    const list = el("ul");
    for (const row of group.rows) {
      const item = el("li", "mono");
      item.append(
        el("span", "loc", formatLocation(row)),
        el("span", "kindctx", ` ${row.kind}/${row.context} `),
        el("span", "name", row.name),
        el("span", "snippet", `  ${row.snippet.trim()}`),
      );
      list.append(item);
    }
    section.append(list);
    resultsArea.append(section);
  }
  if (response.truncated) {
    resultsArea.append(el("p", "note", "results truncated"));
  }
}

function remember(query: string): void {
  const item = el("li");
  const link = el("button", "history-item", query);
  link.type = "button";
  link.addEventListener("click", () => {
    input.value = query;
    submit.disabled = pending;
    void run(query);
  });
  item.append(link);
  historyList.prepend(item);
  while (historyList.children.length > 20) {
    historyList.lastElementChild?.remove();
  }
}

async function run(query: string): Promise<void> {
  if (pending) return;
  setPending(true);
  try {
    const response = await postQuery(query);
    render(response);
    remember(query);
  } catch (error) {
    renderError(error instanceof Error ? error.message : String(error));
  } finally {
    setPending(false);
  }
}

form.addEventListener("submit", (event) => {
  event.preventDefault();
  const query = input.value.trim();
  if (query) {
    void run(query);
  }
});

submit.disabled = true;
