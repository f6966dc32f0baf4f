"""Independent brute-force walker over the sample Java sources.

Re-derives every (element kind, context) bucket as a set of
(file, line, column, name) facts using line-oriented regex scanning with
its own shadow tracking -- deliberately a separate implementation from the
package's recursive-descent parser, used only to cross-check the index.
Assumes the sample corpus style: one declaration or statement per line.
"""

from __future__ import annotations

import re
from collections import defaultdict
from pathlib import Path

PRIMITIVES = {"int", "long", "short", "byte", "float", "double", "boolean", "char", "void"}
MODIFIERS = {"public", "private", "protected", "static", "final", "abstract"}
NON_CALL_KEYWORDS = {"if", "while", "for", "switch", "catch", "return", "super", "this", "new"}
KEYWORDS = PRIMITIVES | MODIFIERS | NON_CALL_KEYWORDS | {
    "package", "import", "class", "interface", "extends", "implements",
    "else", "break", "continue", "throws", "throw", "null", "true", "false",
}

WORD = re.compile(r"[A-Za-z_$][\w$]*")

Fact = tuple[str, int, int, str]  # file, line, column, name


def _words(line: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in WORD.finditer(line)]


def _generic_span(line: str, start: int) -> tuple[int, int] | None:
    lt = line.find("<", start)
    if lt == -1:
        return None
    depth = 0
    for i in range(lt, len(line)):
        if line[i] == "<":
            depth += 1
        elif line[i] == ">":
            depth -= 1
            if depth == 0:
                return (lt, i + 1)
    return None


class _FileScan:
    def __init__(self, rel: str, text: str, out: dict):
        self.rel = rel
        self.lines = text.splitlines()
        self.out = out
        self.fields_by_class: dict[str, set[str]] = {}
        self.class_name: str | None = None
        self.params: set[str] = set()
        self.locals: set[str] = set()

    def add(self, kind: str, context: str, name: str, lineno: int, col: int) -> None:
        self.out[(kind, context)].add((self.rel, lineno, col, name))

    # --- pass 1: field names per class ---

    def collect_fields(self) -> None:
        depth = 0
        current = None
        for line in self.lines:
            stripped = line.strip()
            header = re.match(
                r"^\s*(?:(?:public|private|protected|static|final|abstract)\s+)*"
                r"(?:class|interface)\s+(\w+)", line)
            if depth == 0 and header:
                current = header.group(1)
                self.fields_by_class.setdefault(current, set())
            elif depth == 1 and current and "(" not in line and stripped.endswith(";"):
                m = re.match(
                    r"^\s*(?:(?:public|private|protected|static|final)\s+)*"
                    r"([A-Za-z_$][\w$]*)(?:\s*<[^>]*>)?(?:\s*\[\s*\])?\s+"
                    r"([A-Za-z_$][\w$]*)\s*(?:=.*)?;", line)
                if m and m.group(1) not in KEYWORDS - PRIMITIVES:
                    self.fields_by_class[current].add(m.group(2))
            depth += line.count("{") - line.count("}")

    # --- pass 2: emit facts ---

    def scan(self) -> None:
        depth = 0
        for lineno, line in enumerate(self.lines, start=1):
            start_depth = depth
            depth += line.count("{") - line.count("}")

            pkg = re.match(r"^\s*package\s+([\w.]+)\s*;", line)
            if pkg:
                self.add("PACKAGE", "DECLARATION", pkg.group(1),
                         lineno, pkg.start(1) + 1)
                continue
            if re.match(r"^\s*import\b", line):
                continue

            if start_depth == 0 and re.search(r"\b(class|interface)\s+\w+", line):
                self._header(line, lineno)
                continue
            if start_depth == 1 and self.class_name:
                if "(" in line:
                    self._member_with_parens(line, lineno)
                    continue
                self._field_line(line, lineno)
                continue
            if start_depth >= 2 and self.class_name:
                self._body_line(line, lineno)

    def _header(self, line: str, lineno: int) -> None:
        m = re.search(r"\b(class|interface)\s+(\w+)", line)
        self.class_name = m.group(2)
        self.add("TYPE", "DECLARATION", m.group(2), lineno, m.start(2) + 1)
        span = _generic_span(line, m.end(2))
        after = m.end(2)
        if span:
            self._bounds_in(line, lineno, span)
            after = span[1]
        for kw in ("extends", "implements"):
            kw_match = re.search(rf"\b{kw}\b", line[after:])
            if not kw_match:
                continue
            seg_start = after + kw_match.end()
            seg_end = len(line)
            stop = re.search(r"\bimplements\b|\{", line[seg_start:])
            if stop:
                seg_end = seg_start + stop.start()
            for name, col in _words(line[seg_start:seg_end]):
                self.add("TYPE", "REFERENCE", name, lineno, seg_start + col)

    def _bounds_in(self, line: str, lineno: int, span: tuple[int, int]) -> None:
        segment = line[span[0]:span[1]]
        for m in re.finditer(r"\bextends\s+(\w+(?:\s*&\s*\w+)*)", segment):
            for w in WORD.finditer(m.group(1)):
                col = span[0] + m.start(1) + w.start() + 1
                self.add("TYPE", "PARAMETER_BOUND", w.group(), lineno, col)
                self.add("TYPE", "REFERENCE", w.group(), lineno, col)

    def _field_line(self, line: str, lineno: int) -> None:
        m = re.match(
            r"^\s*(?:(?:public|private|protected|static|final)\s+)*"
            r"([A-Za-z_$][\w$]*)(\s*<[^>]*>)?(?:\s*\[\s*\])?\s+"
            r"([A-Za-z_$][\w$]*)\s*(?:=.*)?;", line)
        if not m or m.group(1) in KEYWORDS - PRIMITIVES:
            return
        type_name, name = m.group(1), m.group(3)
        self.add("FIELD", "DECLARATION", name, lineno, m.start(3) + 1)
        if type_name not in PRIMITIVES:
            self.add("TYPE", "REFERENCE", type_name, lineno, m.start(1) + 1)
        if m.group(2):
            for w in WORD.finditer(m.group(2)):
                self.add("TYPE", "REFERENCE", w.group(), lineno, m.start(2) + w.start() + 1)

    def _member_with_parens(self, line: str, lineno: int) -> None:
        paren = line.index("(")
        head = line[:paren]
        span = _generic_span(head, 0)
        if span:
            self._bounds_in(line, lineno, span)
            head_words = [
                (w, c) for w, c in _words(head)
                if not (span[0] < c - 1 < span[1]) and w not in MODIFIERS
            ]
        else:
            head_words = [(w, c) for w, c in _words(head) if w not in MODIFIERS]
        if not head_words:
            return
        name, name_col = head_words[-1]
        self.params = set()
        self.locals = set()
        if name == self.class_name and len(head_words) == 1:
            self.add("CONSTRUCTOR", "DECLARATION", name, lineno, name_col)
        else:
            self.add("METHOD", "DECLARATION", name, lineno, name_col)
            if len(head_words) >= 2:
                ret, ret_col = head_words[-2]
                if ret != "void":
                    self.add("METHOD", "RETURN_TYPE", ret, lineno, ret_col)
                if ret not in PRIMITIVES:
                    self.add("TYPE", "REFERENCE", ret, lineno, ret_col)
        close = line.rindex(")")
        self._params(line, lineno, paren + 1, close)

    def _params(self, line: str, lineno: int, start: int, end: int) -> None:
        segment = line[start:end]
        if not segment.strip():
            return
        offset = start
        for part in segment.split(","):
            words = [
                (w, offset + c) for w, c in _words(part) if w != "final"
            ]
            if len(words) >= 2:
                (type_name, type_col), (param_name, _) = words[0], words[-1]
                self.add("METHOD", "METHOD_PARAMETER", type_name, lineno, type_col)
                if type_name not in PRIMITIVES:
                    self.add("TYPE", "REFERENCE", type_name, lineno, type_col)
                self.params.add(param_name)
            offset += len(part) + 1

    def _body_line(self, line: str, lineno: int) -> None:
        fields = self.fields_by_class.get(self.class_name, set())
        decl_positions: set[int] = set()

        decl = re.match(
            r"^\s*([A-Za-z_$][\w$]*)(\s*<[^>]*>)?(?:\s*\[\s*\])?\s+"
            r"([A-Za-z_$][\w$]*)\s*[=;]", line)
        if decl and decl.group(1) not in KEYWORDS:
            type_name = decl.group(1)
            self.add("TYPE", "REFERENCE", type_name, lineno, decl.start(1) + 1)
            decl_positions.add(decl.start(1) + 1)
            if decl.group(2):
                for w in WORD.finditer(decl.group(2)):
                    col = decl.start(2) + w.start() + 1
                    self.add("TYPE", "REFERENCE", w.group(), lineno, col)
                    decl_positions.add(col)
            self.locals.add(decl.group(3))
            decl_positions.add(decl.start(3) + 1)
        elif decl and decl.group(1) in PRIMITIVES:
            self.locals.add(decl.group(3))
            decl_positions.add(decl.start(3) + 1)

        for m in re.finditer(r"\bnew\s+(\w+)", line):
            col = m.start(1) + 1
            self.add("TYPE", "INSTANCE_CREATION", m.group(1), lineno, col)
            self.add("TYPE", "REFERENCE", m.group(1), lineno, col)

        for m in re.finditer(r"([A-Za-z_$][\w$]*)\s*\(", line):
            name = m.group(1)
            if name in KEYWORDS:
                continue
            before = line[: m.start(1)].rstrip()
            if before.endswith("new"):
                continue
            col = m.start(1) + 1
            self.add("METHOD", "CALL", name, lineno, col)
            self.add("METHOD", "REFERENCE", name, lineno, col)
            if before.endswith("super."):
                self.add("METHOD", "SUPER_REFERENCE_METHOD_CALL", name, lineno, col)

        for name, col in _words(line):
            if name in KEYWORDS or name not in fields:
                continue
            if col in decl_positions:
                continue
            after = line[col - 1 + len(name):]
            before = line[: col - 1]
            stripped_after = after.lstrip()
            if stripped_after.startswith("("):
                continue
            stripped_before = before.rstrip()
            if stripped_before.endswith("."):
                # this.x is the field even when a local shadows it; any
                # other receiver is not lexically resolvable.
                receiver = stripped_before[:-1].rstrip()
                if not receiver.endswith("this"):
                    continue
            elif name in self.locals or name in self.params:
                continue
            reads: list[bool] = []
            if re.match(r"=(?!=)", stripped_after):
                reads = [False]
            elif re.match(r"(\+=|-=|\*=|/=|%=|&=|\|=|\^=)", stripped_after):
                reads = [True, False]
            elif stripped_after.startswith(("++", "--")) or stripped_before.endswith(("++", "--")):
                reads = [True, False]
            else:
                reads = [True]
            for is_read in reads:
                ctx = "READ_ACCESS" if is_read else "WRITE_ACCESS"
                self.add("FIELD", ctx, name, lineno, col)
                self.add("FIELD", "REFERENCE", name, lineno, col)


def walk(root: str | Path) -> dict[tuple[str, str], set[Fact]]:
    """All (kind, context) buckets of the corpus as position/name sets."""
    out: dict[tuple[str, str], set[Fact]] = defaultdict(set)
    root = Path(root)
    for path in sorted(root.rglob("*.java")):
        rel = path.relative_to(root).as_posix()
        scanner = _FileScan(rel, path.read_text(encoding="utf-8"), out)
        scanner.collect_fields()
        scanner.scan()
    return dict(out)
