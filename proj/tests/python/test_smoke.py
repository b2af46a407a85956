from fractions import Fraction

import pytest

import tenskit as tk


def vec(entries, label="x"):
    return tk.TensorMap(2, [], [label], entries)


def test_compose_matches_fixed_product():
    x = tk.TensorMap(2, ["a"], ["b"], [1, 2, 3, 4])
    y = tk.TensorMap(2, ["c"], ["a"], [5, 6, 7, 8])
    z = tk.compose(x, y, [("a", "a")])
    assert z.subs == ["c"]
    assert z.supers == ["b"]
    assert z.entries == [Fraction(23), Fraction(34), Fraction(31), Fraction(46)]


def test_fractions_cross_the_boundary_exactly():
    v = vec([Fraction(1, 3), "2/7"])
    w = tk.scale(Fraction(21), v)
    assert w.entries == [Fraction(7), Fraction(6)]
    assert tk.add(v, v).entries == [Fraction(2, 3), Fraction(4, 7)]
    with pytest.raises(TypeError):
        vec([0.5, 1.5])


def test_expression_evaluation_and_pretty_printing():
    env = {
        "g": tk.TensorMap(2, ["x", "y"], [], [1, 2, 2, 5]),
        "u": vec([1, 0]),
        "v": vec([0, 1]),
    }
    r = tk.eval_expr("g_ab u^a v^b", env)
    assert r.subs == [] and r.supers == []
    assert r.entries == [Fraction(2)]

    assert tk.pretty("f_a^b . g_c^a") == "f_a^b g_c^a"
    assert "compose matches[(a,a)]" in tk.plan("f_a^b . g_c^a")
    with pytest.raises(tk.TenskitError):
        tk.eval_expr("t^a . s_a", env)


def test_metric_round_trip():
    g = tk.Metric(2, [2, 0, 0, 3])
    assert g.inverse_entries == [Fraction(1, 2), 0, 0, Fraction(1, 3)]
    v = vec([1, 1])
    low = tk.lower_index(v, "x", g)
    assert low.subs == ["x'"]
    assert low.entries == [Fraction(2), Fraction(3)]
    up = tk.raise_index(low, "x'", g)
    assert up.entries == [Fraction(1), Fraction(1)]
    with pytest.raises(tk.TenskitError):
        tk.Metric(2, [1, 2, 3, 4])  # not symmetric


def test_basis_change_and_json():
    c = tk.BasisChange(2, [1, 1, 0, 1], "e", "f")
    x = tk.TensorMap(2, ["a"], ["b"], [1, 2, 3, 4])
    moved = tk.transform(x, c)
    assert moved.basis == "f"
    assert moved == tk.transform_operator(x, c)
    assert moved.entries == [Fraction(4), Fraction(2), Fraction(3), Fraction(1)]

    text = tk.to_json(moved, "moved")
    back, name = tk.from_json(text)
    assert name == "moved"
    assert back == moved


def test_apply_multi_and_suites():
    g = tk.TensorMap(2, ["a", "b"], [], [1, 2, 2, 5])
    out = tk.apply_multi(g, [[1, 0], [0, 1]])
    assert out == [Fraction(2)]

    assert "lambdaB" in tk.suite_names()
    cases, failures = tk.run_suite("lambdaB", dim=2, seed=7, cases=5)
    assert (cases, failures) == (5, 0)


if __name__ == "__main__":
    import sys

    fns = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for fn in fns:
        fn()
        print(f"ok {fn.__name__}")
    print(f"{len(fns)} smoke tests passed")
    sys.exit(0)
