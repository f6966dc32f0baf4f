import pytest

from nlquery.javaparse import ParseError, parse_source


class TestDeclarations:
    def test_field_write_and_read(self):
        model = parse_source(
            "class A { int balance; void f(){ balance = balance + 1; } }", "A.java"
        )
        (decl,) = model.types
        assert [f.name for f in decl.fields] == ["balance"]
        writes = [a for a in model.accesses if a.is_write]
        reads = [a for a in model.accesses if not a.is_write]
        assert [(w.field_name, w.line) for w in writes] == [("balance", 1)]
        assert [(r.field_name, r.line) for r in reads] == [("balance", 1)]
        assert writes[0].enclosing == "A.f"

    def test_empty_file(self):
        model = parse_source("", "Empty.java")
        assert model.package is None
        assert model.types == []

    def test_parameter_bound(self):
        model = parse_source("class B<I extends Integer> {}", "B.java")
        (decl,) = model.types
        (param,) = decl.type_params
        assert param.name == "I"
        assert [b.name for b in param.bounds] == ["Integer"]

    def test_package_and_position(self):
        model = parse_source("package com.x.y;\nclass A {}", "A.java")
        assert model.package == "com.x.y"
        assert (model.package_line, model.package_column) == (1, 9)

    def test_constructor_vs_method(self):
        model = parse_source(
            "class A { A() {} void a() {} }", "A.java"
        )
        (decl,) = model.types
        kinds = [(m.name, m.is_constructor) for m in decl.methods]
        assert kinds == [("A", True), ("a", False)]

    def test_extends_implements(self):
        model = parse_source(
            "class A extends B implements C, D {}", "A.java"
        )
        (decl,) = model.types
        assert [r.name for r in decl.extends] == ["B"]
        assert [r.name for r in decl.implements] == ["C", "D"]

    def test_interface_method_without_body(self):
        model = parse_source("interface I { void f(); }", "I.java")
        assert [m.name for m in model.types[0].methods] == ["f"]


class TestBodies:
    def test_super_call_flag(self):
        model = parse_source(
            "class A { void f() { super.f(); g(); } }", "A.java"
        )
        flags = {c.callee: c.is_super for c in model.calls}
        assert flags == {"f": True, "g": False}

    def test_instance_creation(self):
        model = parse_source(
            "class A { void f() { Widget w = new Widget(); } }", "A.java"
        )
        (creation,) = model.creations
        assert creation.type_name == "Widget"
        assert creation.enclosing == "A.f"

    def test_locals_shadow_fields(self):
        model = parse_source(
            "class A { int x; void f(int x) { x = 1; this.x = 2; } }", "A.java"
        )
        writes = [(a.field_name, a.is_write) for a in model.accesses]
        assert writes == [("x", True)]  # only this.x counts

    def test_compound_assignment_reads_and_writes(self):
        model = parse_source(
            "class A { int x; void f() { x += 1; } }", "A.java"
        )
        assert sorted(a.is_write for a in model.accesses) == [False, True]

    def test_foreign_receiver_ignored(self):
        model = parse_source(
            "class A { int x; void f(B b) { b.x = 1; } }", "A.java"
        )
        assert model.accesses == []

    def test_receiver_field_is_read(self):
        model = parse_source(
            "class A { B helper; void f() { helper.run(); } }", "A.java"
        )
        (access,) = model.accesses
        assert (access.field_name, access.is_write) == ("helper", False)
        assert [c.callee for c in model.calls] == ["run"]

    def test_increment_counts_read_and_write(self):
        model = parse_source("class A { int x; void f() { x++; } }", "A.java")
        assert sorted(a.is_write for a in model.accesses) == [False, True]


class TestErrors:
    def test_missing_brace(self):
        with pytest.raises(ParseError) as err:
            parse_source("class A {", "A.java")
        assert "A.java" in str(err.value)

    def test_not_a_type(self):
        with pytest.raises(ParseError, match="expected 'class' or 'interface'"):
            parse_source("banana;", "A.java")

    def test_position_reported(self):
        with pytest.raises(ParseError) as err:
            parse_source("class A { int ; }", "A.java")
        assert err.value.line == 1
        assert err.value.column > 0

    def test_stray_character(self):
        with pytest.raises(ParseError):
            parse_source("class A { int x = `bad`; }", "A.java")


class TestDeterminism:
    def test_same_input_same_model(self):
        text = "class A { int x; void f() { x = 1; g(); } }"
        first = parse_source(text, "A.java")
        second = parse_source(text, "A.java")
        assert first == second
