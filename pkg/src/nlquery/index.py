"""Structural index over parsed sources and query execution against it."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .javaparse import ParseError, SourceModel, parse_source
from .model import ContextKind, ElectedQuery, ElementKind, SearchResult

_EK = ElementKind
_CK = ContextKind

#: (element kind, context) pairs the index can answer. Contexts listed in
#: the dependency table pair only with their implied kind.
SUPPORTED_COMBINATIONS: frozenset[tuple[ElementKind, ContextKind]] = frozenset(
    [(kind, _CK.DECLARATION) for kind in
     (_EK.TYPE, _EK.METHOD, _EK.FIELD, _EK.PACKAGE, _EK.CONSTRUCTOR)]
    + [
        (_EK.METHOD, _CK.CALL),
        (_EK.METHOD, _CK.SUPER_REFERENCE_METHOD_CALL),
        (_EK.METHOD, _CK.RETURN_TYPE),
        (_EK.METHOD, _CK.METHOD_PARAMETER),
        (_EK.FIELD, _CK.READ_ACCESS),
        (_EK.FIELD, _CK.WRITE_ACCESS),
        (_EK.TYPE, _CK.INSTANCE_CREATION),
        (_EK.TYPE, _CK.PARAMETER_BOUND),
        (_EK.TYPE, _CK.REFERENCE),
        (_EK.FIELD, _CK.REFERENCE),
        (_EK.METHOD, _CK.REFERENCE),
    ]
)


class IoError(OSError):
    """Raised when the source root cannot be read."""


class UnsupportedCombination(ValueError):
    """The (kind, context) pair is semantically void; the translation is
    wrong upstream (e.g. PACKAGE + READ_ACCESS)."""

    def __init__(self, kind: ElementKind, context: ContextKind):
        super().__init__(f"unsupported combination: {kind.value} + {context.value}")
        self.kind = kind
        self.context = context


@dataclass(frozen=True)
class IndexEntry:
    name: str
    file: str
    line: int
    column: int
    enclosing: str


@dataclass
class IndexReport:
    files_indexed: int = 0
    files_skipped: list[tuple[str, str]] = field(default_factory=list)

    @property
    def diagnostics(self) -> list[str]:
        return [f"{path}: {reason}" for path, reason in self.files_skipped]


@dataclass
class CodeIndex:
    """Immutable after build: (kind, context) buckets of named positions."""

    entries: dict[tuple[ElementKind, ContextKind], list[IndexEntry]] = field(
        default_factory=dict
    )
    lines: dict[str, list[str]] = field(default_factory=dict)
    report: IndexReport = field(default_factory=IndexReport)

    def add(self, kind: ElementKind, context: ContextKind, entry: IndexEntry) -> None:
        self.entries.setdefault((kind, context), []).append(entry)

    def bucket(self, kind: ElementKind, context: ContextKind) -> list[IndexEntry]:
        return self.entries.get((kind, context), [])

    def snippet(self, file: str, line: int) -> str:
        file_lines = self.lines.get(file, [])
        if 1 <= line <= len(file_lines):
            return file_lines[line - 1].rstrip()
        return ""

    def element_count(self) -> int:
        return sum(len(v) for v in self.entries.values())


def _index_model(index: CodeIndex, model: SourceModel, rel_path: str) -> None:
    def add(kind: ElementKind, context: ContextKind, name: str, line: int,
            column: int, enclosing: str) -> None:
        index.add(kind, context, IndexEntry(name=name, file=rel_path, line=line,
                                            column=column, enclosing=enclosing))

    if model.package:
        add(_EK.PACKAGE, _CK.DECLARATION, model.package,
            model.package_line, model.package_column, rel_path)

    package = model.package or ""
    for decl in model.types:
        type_enclosing = package
        qualified_type = model.qualified(decl.name)
        add(_EK.TYPE, _CK.DECLARATION, decl.name, decl.line, decl.column, type_enclosing)
        for tp in decl.type_params:
            for bound in tp.bounds:
                add(_EK.TYPE, _CK.PARAMETER_BOUND, bound.name,
                    bound.line, bound.column, qualified_type)
                add(_EK.TYPE, _CK.REFERENCE, bound.name,
                    bound.line, bound.column, qualified_type)
        for ref in decl.extends + decl.implements:
            add(_EK.TYPE, _CK.REFERENCE, ref.name, ref.line, ref.column, qualified_type)
        for fd in decl.fields:
            add(_EK.FIELD, _CK.DECLARATION, fd.name, fd.line, fd.column, qualified_type)
        for method in decl.methods:
            qualified_method = model.qualified(decl.name, method.name)
            if method.is_constructor:
                add(_EK.CONSTRUCTOR, _CK.DECLARATION, method.name,
                    method.line, method.column, qualified_type)
            else:
                add(_EK.METHOD, _CK.DECLARATION, method.name,
                    method.line, method.column, qualified_type)
            if method.return_type is not None:
                rt = method.return_type
                add(_EK.METHOD, _CK.RETURN_TYPE, rt.name, rt.line, rt.column,
                    qualified_method)
            for param in method.params:
                pt = param.type_ref
                add(_EK.METHOD, _CK.METHOD_PARAMETER, pt.name, pt.line, pt.column,
                    qualified_method)
            for tp in method.type_params:
                for bound in tp.bounds:
                    add(_EK.TYPE, _CK.PARAMETER_BOUND, bound.name,
                        bound.line, bound.column, qualified_method)
                    add(_EK.TYPE, _CK.REFERENCE, bound.name,
                        bound.line, bound.column, qualified_method)

    for call in model.calls:
        add(_EK.METHOD, _CK.CALL, call.callee, call.line, call.column, call.enclosing)
        add(_EK.METHOD, _CK.REFERENCE, call.callee, call.line, call.column, call.enclosing)
        if call.is_super:
            add(_EK.METHOD, _CK.SUPER_REFERENCE_METHOD_CALL, call.callee,
                call.line, call.column, call.enclosing)
    for access in model.accesses:
        context = _CK.WRITE_ACCESS if access.is_write else _CK.READ_ACCESS
        add(_EK.FIELD, context, access.field_name,
            access.line, access.column, access.enclosing)
        add(_EK.FIELD, _CK.REFERENCE, access.field_name,
            access.line, access.column, access.enclosing)
    for creation in model.creations:
        add(_EK.TYPE, _CK.INSTANCE_CREATION, creation.type_name,
            creation.line, creation.column, creation.enclosing)
    for body_ref in model.type_refs:
        add(_EK.TYPE, _CK.REFERENCE, body_ref.ref.name,
            body_ref.ref.line, body_ref.ref.column, body_ref.enclosing)


def build_index(root: str | Path) -> CodeIndex:
    """Parse every .java file under root; per-file failures are diagnostics,
    not fatal."""
    root = Path(root)
    if not root.is_dir():
        raise IoError(f"source root is not a directory: {root}")
    index = CodeIndex()
    for path in sorted(root.rglob("*.java")):
        rel_path = path.relative_to(root).as_posix()
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            index.report.files_skipped.append((rel_path, str(exc)))
            continue
        try:
            model = parse_source(text, rel_path)
        except ParseError as exc:
            index.report.files_skipped.append((rel_path, exc.reason))
            continue
        index.lines[rel_path] = text.splitlines()
        _index_model(index, model, rel_path)
        index.report.files_indexed += 1

    # Deduplicate (a position can be recorded once per role only) and fix order.
    for key, entries in index.entries.items():
        unique = sorted(set(entries), key=lambda e: (e.file, e.line, e.column, e.name))
        index.entries[key] = unique
    return index


def compile_pattern(identifier: str) -> re.Pattern[str]:
    """Wildcard pattern to regex: '*' any run (possibly empty), '?' one
    character; everything else literal; case-sensitive full match."""
    out = []
    for ch in identifier:
        if ch == "*":
            out.append(".*")
        elif ch == "?":
            out.append(".")
        else:
            out.append(re.escape(ch))
    return re.compile("".join(out) + r"\Z")


def normalize_identifier(identifier: str) -> str:
    """A trailing '()' marks a method-style identifier; matching ignores it."""
    if identifier.endswith("()") and len(identifier) > 2:
        return identifier[:-2]
    return identifier


def execute(index: CodeIndex, query: ElectedQuery) -> list[SearchResult]:
    """Return the (kind, context) bucket entries whose name matches the
    identifier pattern, ordered by (file, line, column)."""
    kind, context = query.element_kind, query.context
    if kind is ElementKind.UNKNOWN or context is ContextKind.UNKNOWN:
        raise ValueError("cannot execute a query with unknown parameters")
    if (kind, context) not in SUPPORTED_COMBINATIONS:
        raise UnsupportedCombination(kind, context)
    pattern = compile_pattern(normalize_identifier(query.identifier))
    results = [
        SearchResult(
            file=entry.file,
            line=entry.line,
            column=entry.column,
            element_kind=kind,
            context=context,
            element_name=entry.name,
            enclosing=entry.enclosing,
            snippet=index.snippet(entry.file, entry.line),
        )
        for entry in index.bucket(kind, context)
        if pattern.match(entry.name)
    ]
    results.sort(key=lambda r: (r.file, r.line, r.column))
    return results
