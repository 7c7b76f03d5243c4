import pytest

import typed_patterns as tp


def test_format_round_trip():
    tpl = tp.parse_template("Hello {}")
    assert tpl.arity == 1
    assert tpl.render() == "Hello {}"
    assert tp.format_checked(tpl, ["World"]) == "Hello World"


def test_format_accepts_non_string_args():
    tpl = tp.parse_template("{} + {}")
    assert tp.format_checked(tpl, [1, 2]) == "1 + 2"


def test_format_arity_error():
    tpl = tp.parse_template("Hello {}")
    with pytest.raises(tp.ArityError):
        tp.format_checked(tpl, [])
    with pytest.raises(tp.ArityError):
        tp.format_checked(tpl, ["World", "Again"])


def test_format_dynamic_hazards():
    tpl = tp.parse_template("Hello {}")
    assert tp.format_dynamic(tpl, ["World", "Again"]) == "Hello World"
    with pytest.raises(tp.MisuseFault, match="TOO_FEW_ARGS"):
        tp.format_dynamic(tpl, [])


def test_parse_error_reports_column():
    with pytest.raises(tp.ParseError, match="column 5"):
        tp.parse_template("oops {")


def test_drain_and_trace():
    fs = tp.FakeFs()
    fs.seed("f.txt", b"abcdefghij", 4)
    assert tp.drain(fs, "f.txt") == [b"abcd", b"efgh", b"ij"]
    lines = fs.trace_lines()
    assert lines[0] == "open(f.txt) -> 1"
    assert lines[-1] == "close(1)"
    assert len(lines) == 9


def test_naive_file_faults_past_eof():
    fs = tp.FakeFs()
    fs.seed("f.txt", b"abc", 8)
    f = tp.NaiveFile.open(fs, "f.txt")
    assert f.read() == b"abc"
    with pytest.raises(tp.MisuseFault, match="READ_PAST_EOF"):
        f.read()


def test_checked_file_is_total():
    fs = tp.FakeFs()
    fs.seed("e.txt", b"", 4)
    f = tp.CheckedFile.open(fs, "e.txt")
    assert f.state == tp.CheckedFile.State.Eof
    assert f.read() is None
    assert f.close() is True
    assert f.close() is False


def test_unseeded_path_is_a_fixture_error():
    fs = tp.FakeFs()
    with pytest.raises(tp.FixtureError):
        fs.sys_open("missing.txt")


def test_witness_routes():
    assert "ADMIN PANEL" in tp.route_admin_panel(tp.User("alice", admin=True))
    assert "404" in tp.route_admin_panel(tp.User("bob"))
    assert tp.try_admin(tp.User("bob")) is None
    token = tp.try_admin(tp.User("alice", admin=True))
    assert token is not None
    assert "ADMIN PANEL" in tp.render_admin_panel(token)


def test_admin_token_cannot_be_forged():
    with pytest.raises(TypeError):
        tp.AdminToken()


def test_string_registry():
    reg = tp.StringRegistry()
    seen = []
    reg.register("click", seen.append)
    reg.trigger("click", {"x": 1})
    reg.trigger("clack", {"x": 2})  # typo: silent no-op, the documented hazard
    assert seen == [{"x": 1}]


def test_demo_scenario_log():
    lines = tp.run_typed_demo_scenario()
    assert lines == ["OnClick#0 mouse_x=1 mouse_y=3", "OnKeyPress#0 key=Enter"]
