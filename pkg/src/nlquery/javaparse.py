"""Recursive-descent parser for the supported Java subset.

Supported: package declarations, imports (skipped), top-level classes and
interfaces with extends/implements and singly-nested generics, fields,
methods, constructors, and method bodies made of local declarations,
if/while/return statements, and call/assignment/increment expressions.

Name resolution is purely lexical: ``balance`` and ``this.balance`` resolve
to the enclosing class's field unless shadowed by a parameter or local;
accesses through any other receiver are not indexed. Field initializers
are expected to be literals and are not analyzed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

_KEYWORDS = {
    "package", "import", "class", "interface", "extends", "implements",
    "public", "private", "protected", "static", "final", "abstract",
    "void", "new", "super", "this", "return", "if", "else", "while",
    "for", "break", "continue", "throws", "throw", "null", "true", "false",
    "int", "long", "short", "byte", "float", "double", "boolean", "char",
}

_PRIMITIVES = {"int", "long", "short", "byte", "float", "double", "boolean", "char"}

_MODIFIERS = {"public", "private", "protected", "static", "final", "abstract"}

_ASSIGN_OPS = {"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^="}

_TOKEN_RE = re.compile(
    r"""
    (?P<comment>//[^\n]*|/\*.*?\*/)
  | (?P<string>"(?:\\.|[^"\\])*")
  | (?P<char>'(?:\\.|[^'\\])')
  | (?P<number>\d[\w.]*)
  | (?P<ident>[A-Za-z_$][A-Za-z0-9_$]*)
  | (?P<punct>\+\+|--|\+=|-=|\*=|/=|%=|&=|\|=|\^=|==|!=|<=|>=|&&|\|\||[{}()\[\];,.<>=+\-*/%!&|^?:@])
    """,
    re.VERBOSE | re.DOTALL,
)


class ParseError(ValueError):
    def __init__(self, path: str, line: int, column: int, message: str):
        super().__init__(f"{path}:{line}:{column}: {message}")
        self.path = path
        self.line = line
        self.column = column
        self.reason = message


@dataclass(frozen=True)
class JavaToken:
    kind: str  # ident, keyword, number, string, char, punct
    text: str
    line: int
    column: int


def scan(text: str, path: str = "<string>") -> list[JavaToken]:
    tokens: list[JavaToken] = []
    pos = 0
    line = 1
    line_start = 0
    while pos < len(text):
        ch = text[pos]
        if ch in " \t\r":
            pos += 1
            continue
        if ch == "\n":
            pos += 1
            line += 1
            line_start = pos
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(path, line, pos - line_start + 1, f"unexpected character {ch!r}")
        column = pos - line_start + 1
        kind = match.lastgroup
        value = match.group()
        if kind != "comment":
            if kind == "ident" and value in _KEYWORDS:
                kind = "keyword"
            tokens.append(JavaToken(kind=kind, text=value, line=line, column=column))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = pos + value.rfind("\n") + 1
        pos = match.end()
    return tokens


@dataclass(frozen=True)
class TypeRef:
    """One occurrence of a type name (simple name, declaration position)."""

    name: str
    line: int
    column: int
    primitive: bool = False


@dataclass
class ParamDecl:
    name: str
    type_ref: TypeRef


@dataclass
class TypeParam:
    name: str
    bounds: list[TypeRef] = field(default_factory=list)


@dataclass
class CallFact:
    callee: str
    line: int
    column: int
    is_super: bool
    enclosing: str


@dataclass
class AccessFact:
    field_name: str
    line: int
    column: int
    is_write: bool
    enclosing: str


@dataclass
class CreationFact:
    type_name: str
    line: int
    column: int
    enclosing: str


@dataclass
class BodyTypeRef:
    ref: TypeRef
    enclosing: str


@dataclass
class MethodDecl:
    name: str
    owner: str
    line: int
    column: int
    is_constructor: bool = False
    return_type: TypeRef | None = None
    params: list[ParamDecl] = field(default_factory=list)
    type_params: list[TypeParam] = field(default_factory=list)


@dataclass
class FieldDecl:
    name: str
    owner: str
    line: int
    column: int
    type_ref: TypeRef | None = None


@dataclass
class TypeDecl:
    name: str
    kind: str  # "class" | "interface"
    line: int
    column: int
    extends: list[TypeRef] = field(default_factory=list)
    implements: list[TypeRef] = field(default_factory=list)
    type_params: list[TypeParam] = field(default_factory=list)
    fields: list[FieldDecl] = field(default_factory=list)
    methods: list[MethodDecl] = field(default_factory=list)


@dataclass
class SourceModel:
    path: str
    package: str | None = None
    package_line: int = 0
    package_column: int = 0
    types: list[TypeDecl] = field(default_factory=list)
    calls: list[CallFact] = field(default_factory=list)
    accesses: list[AccessFact] = field(default_factory=list)
    creations: list[CreationFact] = field(default_factory=list)
    #: Type-name occurrences: declaration-level and body-level.
    type_refs: list[BodyTypeRef] = field(default_factory=list)

    def qualified(self, *parts: str) -> str:
        prefix = [self.package] if self.package else []
        return ".".join(prefix + [p for p in parts if p])


class _Parser:
    def __init__(self, tokens: list[JavaToken], path: str):
        self.tokens = tokens
        self.path = path
        self.pos = 0
        self._bodies: list[tuple[MethodDecl, list[JavaToken]]] = []

    # --- token helpers ---

    def peek(self, offset: int = 0) -> JavaToken | None:
        i = self.pos + offset
        return self.tokens[i] if i < len(self.tokens) else None

    def at(self, text: str, offset: int = 0) -> bool:
        tok = self.peek(offset)
        return tok is not None and tok.text == text

    def next(self) -> JavaToken:
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else None
            line = last.line if last else 1
            col = last.column if last else 1
            raise ParseError(self.path, line, col, "unexpected end of file")
        self.pos += 1
        return tok

    def expect(self, text: str) -> JavaToken:
        tok = self.next()
        if tok.text != text:
            raise ParseError(self.path, tok.line, tok.column,
                             f"expected {text!r}, found {tok.text!r}")
        return tok

    def expect_ident(self) -> JavaToken:
        tok = self.next()
        if tok.kind != "ident":
            raise ParseError(self.path, tok.line, tok.column,
                             f"expected identifier, found {tok.text!r}")
        return tok

    # --- grammar ---

    def parse(self) -> SourceModel:
        model = SourceModel(path=self.path)
        if self.at("package"):
            self.next()
            first = self.expect_ident()
            parts = [first.text]
            while self.at("."):
                self.next()
                parts.append(self.expect_ident().text)
            model.package = ".".join(parts)
            model.package_line = first.line
            model.package_column = first.column
            self.expect(";")
        while self.at("import"):
            while not self.at(";"):
                self.next()
            self.next()
        while self.peek() is not None:
            model.types.append(self.parse_type_decl(model))
        return model

    def skip_modifiers(self) -> None:
        while True:
            tok = self.peek()
            if tok is not None and tok.text in _MODIFIERS:
                self.next()
            else:
                return

    def parse_type_decl(self, model: SourceModel) -> TypeDecl:
        self.skip_modifiers()
        tok = self.next()
        if tok.text not in ("class", "interface"):
            raise ParseError(self.path, tok.line, tok.column,
                             f"expected 'class' or 'interface', found {tok.text!r}")
        kind = tok.text
        name = self.expect_ident()
        decl = TypeDecl(name=name.text, kind=kind, line=name.line, column=name.column)
        if self.at("<"):
            decl.type_params = self.parse_type_params()
        if self.at("extends"):
            self.next()
            decl.extends.append(self.parse_type().ref)
            while self.at(","):
                self.next()
                decl.extends.append(self.parse_type().ref)
        if self.at("implements"):
            self.next()
            decl.implements.append(self.parse_type().ref)
            while self.at(","):
                self.next()
                decl.implements.append(self.parse_type().ref)
        self.expect("{")
        while not self.at("}"):
            if self.peek() is None:
                raise ParseError(self.path, name.line, name.column,
                                 f"unterminated body of {decl.name}")
            self.parse_member(model, decl)
        self.expect("}")
        self.analyze_bodies(model, decl)
        return decl

    def parse_type_params(self) -> list[TypeParam]:
        self.expect("<")
        params: list[TypeParam] = []
        while True:
            name = self.expect_ident()
            param = TypeParam(name=name.text)
            if self.at("extends"):
                self.next()
                param.bounds.append(self.parse_type().ref)
                while self.at("&"):
                    self.next()
                    param.bounds.append(self.parse_type().ref)
            params.append(param)
            if self.at(","):
                self.next()
                continue
            self.expect(">")
            return params

    def parse_type(self) -> "_ParsedType":
        """Type: primitive or qualified name, optional generics and arrays."""
        tok = self.next()
        if tok.kind == "keyword" and tok.text in _PRIMITIVES:
            ref = TypeRef(tok.text, tok.line, tok.column, primitive=True)
            args: list[TypeRef] = []
        elif tok.kind == "keyword" and tok.text == "void":
            ref = TypeRef("void", tok.line, tok.column, primitive=True)
            args = []
        elif tok.kind == "ident":
            last = tok
            while self.at(".") and self.peek(1) is not None and self.peek(1).kind == "ident":
                self.next()
                last = self.next()
            ref = TypeRef(last.text, last.line, last.column)
            args = []
            if self.at("<"):
                args = self.parse_type_args()
        else:
            raise ParseError(self.path, tok.line, tok.column,
                             f"expected a type, found {tok.text!r}")
        while self.at("[") and self.at("]", 1):
            self.next()
            self.next()
        return _ParsedType(ref=ref, args=args)

    def parse_type_args(self) -> list[TypeRef]:
        self.expect("<")
        refs: list[TypeRef] = []
        while True:
            if self.at("?"):
                self.next()
                if self.at("extends"):
                    self.next()
                    parsed = self.parse_type()
                    refs.append(parsed.ref)
                    refs.extend(parsed.args)
            else:
                parsed = self.parse_type()
                refs.append(parsed.ref)
                refs.extend(parsed.args)
            if self.at(","):
                self.next()
                continue
            self.expect(">")
            return refs

    def parse_member(self, model: SourceModel, decl: TypeDecl) -> None:
        self.skip_modifiers()
        type_params: list[TypeParam] = []
        if self.at("<"):
            type_params = self.parse_type_params()

        # Constructor: ClassName '('
        tok = self.peek()
        if tok is not None and tok.kind == "ident" and tok.text == decl.name and self.at("(", 1):
            name = self.next()
            method = MethodDecl(
                name=name.text, owner=decl.name, line=name.line, column=name.column,
                is_constructor=True, type_params=type_params,
            )
            self.parse_params(model, decl, method)
            self.parse_method_tail(model, decl, method)
            decl.methods.append(method)
            return

        parsed = self.parse_type()
        name = self.expect_ident()
        if self.at("("):
            method = MethodDecl(
                name=name.text, owner=decl.name, line=name.line, column=name.column,
                type_params=type_params,
            )
            if parsed.ref.name != "void":
                method.return_type = parsed.ref
            self._record_decl_type(model, decl, parsed, owner_method=method)
            self.parse_params(model, decl, method)
            self.parse_method_tail(model, decl, method)
            decl.methods.append(method)
            return

        if type_params:
            raise ParseError(self.path, name.line, name.column,
                             "type parameters are only allowed on methods")
        fd = FieldDecl(name=name.text, owner=decl.name,
                       line=name.line, column=name.column, type_ref=parsed.ref)
        decl.fields.append(fd)
        self._record_decl_type(model, decl, parsed, owner_method=None)
        self._skip_field_initializer()
        while self.at(","):
            self.next()
            extra = self.expect_ident()
            decl.fields.append(FieldDecl(name=extra.text, owner=decl.name,
                                         line=extra.line, column=extra.column,
                                         type_ref=parsed.ref))
            self._skip_field_initializer()
        self.expect(";")

    def _record_decl_type(self, model: SourceModel, decl: TypeDecl,
                          parsed: "_ParsedType", owner_method: MethodDecl | None) -> None:
        # Primitive names never count as type references (only class-like
        # names are searchable as TYPE), but they stay visible in return
        # and parameter positions through the method declarations.
        enclosing = model.qualified(decl.name, owner_method.name if owner_method else "")
        for ref in [parsed.ref] + parsed.args:
            if not ref.primitive:
                model.type_refs.append(BodyTypeRef(ref=ref, enclosing=enclosing))

    def _skip_field_initializer(self) -> None:
        if not self.at("="):
            return
        self.next()
        depth = 0
        while True:
            tok = self.peek()
            if tok is None:
                raise ParseError(self.path, 0, 0, "unterminated field initializer")
            if depth == 0 and tok.text in (";", ","):
                return
            if tok.text in ("(", "{", "["):
                depth += 1
            elif tok.text in (")", "}", "]"):
                depth -= 1
            self.next()

    def parse_params(self, model: SourceModel, decl: TypeDecl, method: MethodDecl) -> None:
        self.expect("(")
        enclosing = model.qualified(decl.name, method.name)
        while not self.at(")"):
            if self.at("final"):
                self.next()
            parsed = self.parse_type()
            name = self.expect_ident()
            method.params.append(ParamDecl(name=name.text, type_ref=parsed.ref))
            for ref in [parsed.ref] + parsed.args:
                if not ref.primitive:
                    model.type_refs.append(BodyTypeRef(ref=ref, enclosing=enclosing))
            if self.at(","):
                self.next()
        self.expect(")")

    def parse_method_tail(self, model: SourceModel, decl: TypeDecl, method: MethodDecl) -> None:
        if self.at("throws"):
            self.next()
            self.parse_type()
            while self.at(","):
                self.next()
                self.parse_type()
        if self.at(";"):
            self.next()
            self._bodies.append((method, []))
            return
        open_brace = self.expect("{")
        depth = 1
        body: list[JavaToken] = []
        while depth > 0:
            tok = self.peek()
            if tok is None:
                raise ParseError(self.path, open_brace.line, open_brace.column,
                                 f"unterminated body of {method.name}")
            if tok.text == "{":
                depth += 1
            elif tok.text == "}":
                depth -= 1
                if depth == 0:
                    self.next()
                    break
            body.append(self.next())
        self._bodies.append((method, body))

    # --- body analysis (runs after the enclosing type is fully parsed) ---

    def analyze_bodies(self, model: SourceModel, decl: TypeDecl) -> None:
        field_names = {f.name for f in decl.fields}
        for method, body in self._bodies:
            _BodyWalker(model, decl, method, field_names, self.path).walk(body)
        self._bodies = []


class _ParsedType:
    def __init__(self, ref: TypeRef, args: list[TypeRef]):
        self.ref = ref
        self.args = args


_TYPE_STARTERS = _PRIMITIVES


class _BodyWalker:
    """Extracts calls, field reads/writes, creations, and local type refs
    from a method body token stream."""

    def __init__(self, model: SourceModel, decl: TypeDecl, method: MethodDecl,
                 field_names: set[str], path: str):
        self.model = model
        self.decl = decl
        self.method = method
        self.fields = field_names
        self.path = path
        self.enclosing = model.qualified(decl.name, method.name)
        self.locals = {p.name for p in method.params}
        self.type_vars = {tp.name for tp in decl.type_params} | {
            tp.name for tp in method.type_params
        }

    def walk(self, toks: list[JavaToken]) -> None:
        i = 0
        n = len(toks)
        while i < n:
            tok = toks[i]
            if tok.text == "new" and i + 1 < n and toks[i + 1].kind == "ident":
                i = self._creation(toks, i)
                continue
            if tok.kind == "keyword" and (tok.text in _TYPE_STARTERS):
                i = self._maybe_local_decl(toks, i)
                continue
            if tok.kind == "ident":
                if self._starts_statement(toks, i) and self._looks_like_decl(toks, i):
                    i = self._maybe_local_decl(toks, i)
                    continue
                i = self._identifier(toks, i)
                continue
            i += 1

    def _starts_statement(self, toks: list[JavaToken], i: int) -> bool:
        if i == 0:
            return True
        prev = toks[i - 1].text
        return prev in (";", "{", "}")

    def _looks_like_decl(self, toks: list[JavaToken], i: int) -> bool:
        # Ident [<...>] [[]] Ident ('='|';') is a local variable declaration.
        j = i + 1
        depth = 0
        if j < len(toks) and toks[j].text == "<":
            depth = 1
            j += 1
            while j < len(toks) and depth > 0:
                if toks[j].text == "<":
                    depth += 1
                elif toks[j].text == ">":
                    depth -= 1
                j += 1
        while j + 1 < len(toks) and toks[j].text == "[" and toks[j + 1].text == "]":
            j += 2
        if j < len(toks) and toks[j].kind == "ident":
            k = j + 1
            return k < len(toks) and toks[k].text in ("=", ";")
        return False

    def _maybe_local_decl(self, toks: list[JavaToken], i: int) -> int:
        start = toks[i]
        refs: list[TypeRef] = []
        if start.kind == "ident":
            refs.append(TypeRef(start.text, start.line, start.column))
        j = i + 1
        if j < len(toks) and toks[j].text == "<":
            depth = 1
            j += 1
            while j < len(toks) and depth > 0:
                t = toks[j]
                if t.text == "<":
                    depth += 1
                elif t.text == ">":
                    depth -= 1
                elif t.kind == "ident":
                    refs.append(TypeRef(t.text, t.line, t.column))
                j += 1
        while j + 1 < len(toks) and toks[j].text == "[" and toks[j + 1].text == "]":
            j += 2
        if j >= len(toks) or toks[j].kind != "ident":
            # Not a declaration after all; treat the starter as expression.
            return self._identifier(toks, i) if start.kind == "ident" else i + 1
        name = toks[j]
        self.locals.add(name.text)
        for ref in refs:
            self.model.type_refs.append(BodyTypeRef(ref=ref, enclosing=self.enclosing))
        return j + 1  # continue at '=' or ';'; the RHS is walked normally

    def _creation(self, toks: list[JavaToken], i: int) -> int:
        j = i + 1
        last = toks[j]
        while j + 2 < len(toks) and toks[j + 1].text == "." and toks[j + 2].kind == "ident":
            j += 2
            last = toks[j]
        self.model.creations.append(
            CreationFact(type_name=last.text, line=last.line, column=last.column,
                         enclosing=self.enclosing)
        )
        self.model.type_refs.append(
            BodyTypeRef(ref=TypeRef(last.text, last.line, last.column),
                        enclosing=self.enclosing)
        )
        j += 1
        if j < len(toks) and toks[j].text == "<":
            depth = 1
            j += 1
            while j < len(toks) and depth > 0:
                t = toks[j]
                if t.text == "<":
                    depth += 1
                elif t.text == ">":
                    depth -= 1
                elif t.kind == "ident":
                    self.model.type_refs.append(
                        BodyTypeRef(ref=TypeRef(t.text, t.line, t.column),
                                    enclosing=self.enclosing)
                    )
                j += 1
        return j

    def _identifier(self, toks: list[JavaToken], i: int) -> int:
        tok = toks[i]
        nxt = toks[i + 1] if i + 1 < len(toks) else None
        prev = toks[i - 1] if i > 0 else None

        if nxt is not None and nxt.text == "(":
            is_super = (
                prev is not None and prev.text == "."
                and i >= 2 and toks[i - 2].text == "super"
            )
            self.model.calls.append(
                CallFact(callee=tok.text, line=tok.line, column=tok.column,
                         is_super=is_super, enclosing=self.enclosing)
            )
            return i + 1

        if prev is not None and prev.text == ".":
            receiver = toks[i - 2] if i >= 2 else None
            if receiver is not None and receiver.text == "this":
                return self._field_occurrence(toks, i)
            return i + 1  # foreign receiver: not lexically resolvable

        if tok.text in self.locals or tok.text in self.type_vars:
            return i + 1
        if tok.text in self.fields:
            return self._field_occurrence(toks, i)
        return i + 1

    def _field_occurrence(self, toks: list[JavaToken], i: int) -> int:
        tok = toks[i]
        if tok.text not in self.fields:
            return i + 1
        nxt = toks[i + 1] if i + 1 < len(toks) else None
        prev2 = toks[i - 1] if i > 0 else None
        if nxt is not None and nxt.text == ".":
            # Receiver position (e.g. helper.run()): the receiver is read.
            self._add_access(tok, is_write=False)
            return i + 1
        if nxt is not None and nxt.text == "=":
            self._add_access(tok, is_write=True)
            return i + 2
        if nxt is not None and nxt.text in _ASSIGN_OPS:
            self._add_access(tok, is_write=False)
            self._add_access(tok, is_write=True)
            return i + 2
        if (nxt is not None and nxt.text in ("++", "--")) or (
            prev2 is not None and prev2.text in ("++", "--")
        ):
            self._add_access(tok, is_write=False)
            self._add_access(tok, is_write=True)
            return i + 2 if nxt is not None and nxt.text in ("++", "--") else i + 1
        self._add_access(tok, is_write=False)
        return i + 1

    def _add_access(self, tok: JavaToken, is_write: bool) -> None:
        self.model.accesses.append(
            AccessFact(field_name=tok.text, line=tok.line, column=tok.column,
                       is_write=is_write, enclosing=self.enclosing)
        )


def parse_source(file_text: str, path: str = "<string>") -> SourceModel:
    """Parse one compilation unit into a source model (positions 1-based)."""
    tokens = scan(file_text, path)
    return _Parser(tokens, path).parse()
