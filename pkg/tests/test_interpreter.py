import pytest

from chatbim.interpreter.errors import ErrorKind
from chatbim.interpreter.evaluator import Interpreter, StateDictionary
from chatbim.interpreter.parser import ScriptSource, parse_result, strip_code_fence
from chatbim.kernel.ifcjson import dumps_canonical, model_serialize
from chatbim.kernel.model import Model


def fresh():
    model = Model(seed=0)
    return model, Interpreter(model)


# -- fence stripping -------------------------------------------------------------


def test_strip_fence_extracts_inner_text():
    src = strip_code_fence("Here you go:\n```py\nx = 1\n```\nDone.")
    assert src.text == "x = 1\n"
    assert src.warnings == ()


def test_strip_fence_identity_without_fence():
    assert strip_code_fence("x = 1").text == "x = 1"


def test_strip_fence_two_blocks_takes_first_with_warning():
    src = strip_code_fence("```python\na = 1\n```\ntext\n```py\nb = 2\n```")
    assert src.text == "a = 1\n"
    assert len(src.warnings) == 1


# -- parsing ------------------------------------------------------------------


def test_parse_simple_assignment():
    tree, error = parse_result("x = 1 + 2")
    assert error is None and tree is not None


def test_parse_locates_syntax_errors():
    _, error = parse_result("x = 1\ny = (\n")
    assert error is not None
    assert error.kind == ErrorKind.SYNTAX_ERROR
    assert error.line >= 2


@pytest.mark.parametrize(
    "source, construct",
    [
        ("while True: pass", "while"),
        ("import os", "os"),
        ("from subprocess import run", "subprocess"),
        ("class Foo: pass", "class"),
        ("with open('x') as f: pass", "with"),
        ("try:\n    x = 1\nexcept Exception:\n    pass", "try"),
        ("x = {i: i for i in range(3)}", "dict comprehension"),
        ("x = {i for i in range(3)}", "set comprehension"),
        ("x = (i for i in range(3))", "generator expression"),
        ("x = lambda: 1", "lambda"),
        ("x = {}", "dict display"),
        ("x = 1 if True else 2", "conditional expression"),
        ("x += 1", "augmented assignment"),
        ("del x", "del"),
        ("assert True", "assert"),
        ("raise ValueError()", "raise"),
    ],
)
def test_forbidden_constructs_rejected_by_name(source, construct):
    _, error = parse_result(source)
    assert error is not None
    assert error.kind == ErrorKind.SYNTAX_NOT_ALLOWED
    assert construct in error.message


def test_list_comprehension_is_allowed():
    _, interp = fresh()
    out = interp.execute("squares = [i * i for i in range(5) if i != 2]\nprint(squares)")
    assert out.ok and out.output.strip() == "[0, 1, 9, 16]"


# -- execution semantics -----------------------------------------------------------


def test_state_persists_across_executions():
    _, interp = fresh()
    assert interp.execute("x = 1 + 2").ok
    out = interp.execute("y = x * 2\nprint(y)")
    assert out.ok and out.output.strip() == "6"
    assert interp.state.bindings["y"] == 6


def test_user_functions_persist_and_recurse():
    _, interp = fresh()
    program = """
def fib(n):
    if n < 2:
        return n
    return fib(n - 1) + fib(n - 2)
"""
    assert interp.execute(program).ok
    out = interp.execute("print(fib(10))")
    assert out.ok and out.output.strip() == "55"


def test_recursion_cap():
    _, interp = fresh()
    interp.execute("def loop(n):\n    return loop(n + 1)")
    out = interp.execute("loop(0)")
    assert not out.ok
    assert out.error.kind == ErrorKind.RUNTIME_ERROR
    assert "recursion" in out.error.message


def test_whitelist_violation_for_unknown_callable():
    _, interp = fresh()
    out = interp.execute("mystery_tool(1)")
    assert not out.ok
    assert out.error.kind == ErrorKind.WHITELIST_VIOLATION
    assert "mystery_tool" in out.error.message


def test_os_system_is_whitelist_violation():
    _, interp = fresh()
    out = interp.execute('os.system("x")')
    assert not out.ok
    assert out.error.kind == ErrorKind.WHITELIST_VIOLATION


def test_method_whitelist_blocks_dunder_access():
    _, interp = fresh()
    out = interp.execute("x = []\nx.__class__()")
    assert not out.ok
    assert out.error.kind == ErrorKind.WHITELIST_VIOLATION


def test_tool_errors_carry_call_site():
    model, interp = fresh()
    interp.execute('g = create_story_layer("G", 0, 1)')
    out = interp.execute("a = 1\nb = create_wall((0, 0), (0, 0), g)")
    assert not out.ok
    assert out.error.kind == ErrorKind.TOOL_ERROR
    assert out.error.line == 2
    assert "create_wall" in out.error.message


def test_partial_mutation_kept_on_error():
    model, interp = fresh()
    out = interp.execute('g = create_story_layer("G", 0, 1)\nw = create_wall((0, 0), (5000, 0), g)\nboom()')
    assert not out.ok
    assert len(model.elements) == 1  # the wall created before the failure stays


def test_math_import_and_member_access():
    _, interp = fresh()
    out = interp.execute("import math\nprint(round(math.cos(0) + math.pi, 4))")
    assert out.ok and out.output.strip() == "4.1416"
    out2 = interp.execute("from math import sqrt\nprint(sqrt(25))")
    assert out2.ok and out2.output.strip() == "5.0"


def test_fstrings_and_string_methods():
    _, interp = fresh()
    out = interp.execute('name = "wall"\nprint(f"{name.upper()}: {3 + 4}")')
    assert out.ok and out.output.strip() == "WALL: 7"


def test_tuple_unpacking_in_for_loops():
    _, interp = fresh()
    out = interp.execute(
        'rooms = [("Room 1", 10), ("Room 2", 20)]\nfor name, size in rooms:\n    print(name, size)'
    )
    assert out.ok
    assert out.output.splitlines() == ["Room 1 10", "Room 2 20"]


def test_slicing_and_indexing():
    _, interp = fresh()
    out = interp.execute("xs = [1, 2, 3, 4]\nprint(xs[1:3] + [xs[0]] + xs[-1:])")
    assert out.ok and out.output.strip() == "[2, 3, 1, 4]"


def test_break_and_continue():
    _, interp = fresh()
    out = interp.execute(
        "total = 0\nfor i in range(10):\n    if i == 3:\n        continue\n    if i == 6:\n        break\n    total = total + i\nprint(total)"
    )
    assert out.ok and out.output.strip() == "12"


def test_sequence_repeat_cap():
    _, interp = fresh()
    out = interp.execute("x = [0] * 10000000")
    assert not out.ok and out.error.kind == ErrorKind.RUNTIME_ERROR


def test_pow_cap():
    _, interp = fresh()
    out = interp.execute("x = 10 ** 100000")
    assert not out.ok and out.error.kind == ErrorKind.RUNTIME_ERROR


def test_determinism_same_inputs_same_model():
    script = (
        'g = create_story_layer("G", 0, 1)\n'
        "for i in range(4):\n"
        "    create_wall((0, i * 1000), (5000, i * 1000), g)\n"
    )
    dumps = set()
    for _ in range(5):
        model = Model(seed=0)
        outcome = Interpreter(model).execute(script)
        assert outcome.ok
        dumps.add(dumps_canonical(model_serialize(model)))
    assert len(dumps) == 1


def test_execution_outcome_render_shapes():
    _, interp = fresh()
    ok = interp.execute("x = 1")
    assert ok.render() == "==Result==\nCode executed successfully!"
    bad = interp.execute("boom()")
    assert "WhitelistViolation" in bad.render()


def test_state_dictionary_clear():
    state = StateDictionary()
    model = Model(seed=0)
    interp = Interpreter(model, state)
    interp.execute("x = 5")
    assert state.bindings
    state.clear()
    assert not interp.execute("print(x)").ok


def test_all_26_tools_callable_from_scripts():
    from chatbim.tools.catalog import TOOL_NAMES

    script = """
g = create_story_layer("Ground Floor", 0, 1)
u = create_story_layer("First Floor", 3000, 2)
set_active_story_layer("Ground Floor")
w = create_wall((0, 0), (8000, 0), g)
set_wall_thickness(w, 250)
t = get_wall_thickness(w)
set_wall_elevation(w, 3200, 0)
top, bottom = get_wall_elevation(w)
set_wall_style(w, "Brick Wall")
d = add_door_to_wall(w, 0, 4000, "Door")
win = add_window_to_wall(w, 1000, 6000, "Window")
move_obj(w, 100, 0, 0)
rotate_obj(w, 0)
copies = duplicate_obj(w, u, 1)
p = create_polygon([(0, 0), (8000, 0), (8000, 6000), (0, 6000)], g)
v = get_polygon_vertex(p, 0)
n = get_vertex_count(p)
s = create_slab(p, g)
set_slab_height(s, 0)
h = get_slab_height(s)
set_slab_style(s, "Generic Slab")
a = create_functional_area([(0, 0), (8000, 0), (8000, 6000), (0, 6000)], "Room", g)
r = create_pitched_roof(p, g, 30, 500, 3200, 250)
set_pitched_roof_attributes(r, slope=25)
set_pitched_roof_style(r, "Low Slope Concrete w/ Rigid Insulation")
selected = find_selected_element()
delete_element([copies[0]])
"""
    model = Model(seed=0)
    interp = Interpreter(model)
    outcome = interp.execute(script)
    assert outcome.ok, outcome.error
    # every catalog entry was invoked above
    called = {name for name in TOOL_NAMES if f"{name}(" in script}
    assert called == set(TOOL_NAMES)


def test_error_line_points_into_stripped_source():
    _, interp = fresh()
    reply = "Sure, here is the code:\n```py\nx = 1\ny = 2\nboom()\n```\nHope it helps!"
    outcome = interp.execute(reply)
    assert not outcome.ok
    # line 3 of the fenced block, not of the chat reply
    assert outcome.error.line == 3
    assert outcome.error.offending_snippet == "boom()"
