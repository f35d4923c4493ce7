from pathlib import Path

import pytest

from thermocont.errors import StuckTerm
from thermocont.machine import (
    HALT,
    Choose,
    ContConfig,
    Final,
    HistConfig,
    Let,
    Num,
    Succ,
    Var,
    differential_check,
    format_results,
    format_term,
    free_vars,
    gen_term,
    iter_cont,
    iter_hist,
    nexthist,
    parse_term,
    parse_terms,
    run_cont,
    run_hist,
    step_cont,
    step_hist,
    term_size,
)

GOLDEN = Path(__file__).parent / "golden"

TWO_CHOICE = Let("x", Num(1), Let("y", Num(2), Choose(Var("x"), Var("y"))))


def test_step_examples():
    assert run_cont(Let("x", Num(1), Succ(Var("x")))) == [2]
    assert run_cont(TWO_CHOICE) == [2, 1]
    assert run_hist(TWO_CHOICE) == [2, 1]
    assert step_cont(ContConfig(Num(0), HALT)) == Final((0,))


def test_choose_pushes_second_thread():
    c = ContConfig(Choose(Num(1), Num(2)), HALT)
    assert step_cont(c) == ContConfig(Num(1), HALT, ((Num(2), HALT),), ())


def test_history_choose_installs_future():
    t = Choose(Num(1), Num(2))
    c = HistConfig(t, HALT, (), (), (), t)
    c1 = step_hist(c)
    assert c1 == HistConfig(t, HALT, (), (1,), (), t)
    assert step_hist(c1) == HistConfig(Num(1), HALT, (1,), (), (), t)


def test_history_halt_restarts():
    t = Choose(Num(1), Num(2))
    c = HistConfig(Num(1), HALT, (1,), (), (), t)
    assert step_hist(c) == HistConfig(t, HALT, (), (2,), (1,), t)
    assert step_hist(HistConfig(Num(2), HALT, (2,), (), (1,), t)) == Final((2, 1))


@pytest.mark.parametrize("past,expected", [
    ((1,), (2,)),
    ((1, 2), (2,)),
    ((2, 2), None),
    ((1, 1), (1, 2)),
    ((), None),
])
def test_nexthist(past, expected):
    assert nexthist(past) == expected


def test_choice_free_term_has_one_result():
    t = Let("x", Num(3), Succ(Succ(Var("x"))))
    assert run_hist(t) == run_cont(t) == [5]


def test_free_variable_is_stuck():
    with pytest.raises(StuckTerm):
        run_cont(Var("x"))
    with pytest.raises(StuckTerm):
        run_hist(Choose(Var("x"), Var("y")))


def test_gen_term_size_one_is_numeral():
    assert isinstance(gen_term(0, 1), Num)


def test_gen_term_deterministic():
    for seed in range(50):
        assert gen_term(seed, 12) == gen_term(seed, 12)


def test_gen_term_closed_and_bounded():
    for seed in range(1000):
        t = gen_term(seed, 12)
        assert not free_vars(t)
        assert term_size(t) <= 12


def test_differential_1000_terms():
    assert all(differential_check(gen_term(seed, 12)) for seed in range(1000))


def count_choices_per_path(t):
    """Number of choose nodes hit along each path, in order, from a direct tree walk."""

    def walk(term, env):
        if isinstance(term, Num):
            return [(term.n, 0)]
        if isinstance(term, Var):
            return [(env[term.name], 0)]
        if isinstance(term, Succ):
            return [(n + 1, c) for n, c in walk(term.t, env)]
        if isinstance(term, Let):
            return [(n2, c1 + c2) for n1, c1 in walk(term.bound, env)
                    for n2, c2 in walk(term.body, {**env, term.name: n1})]
        vals = [env[a.name] if isinstance(a, Var) else a.n for a in (term.x, term.y)]
        return [(v, 1) for v in vals]

    return walk(t, {})


def test_results_match_tree_enumeration():
    for seed in range(300):
        t = gen_term(seed, 12)
        paths = count_choices_per_path(t)
        assert run_hist(t) == [n for n, _ in reversed(paths)]
        counts = {c for _, c in paths}
        if len(counts) == 1:
            assert len(paths) == 2 ** counts.pop()


def test_restarts_equal_result_length():
    for seed in range(300):
        t = gen_term(seed, 12)
        configs = list(iter_hist(t))
        # runs of the root: the first one plus every firing of the restart rule
        runs = 1 + sum(1 for prev, nxt in zip(configs, configs[1:])
                       if isinstance(nxt, HistConfig) and isinstance(prev.term, Num)
                       and prev.cont == HALT and nxt.past == () and nxt.term == t)
        assert runs == len(configs[-1].result)


def test_pure_terms_have_identical_traces():
    for seed in range(300):
        t = gen_term(seed, 10)
        if "Choose" in repr(t):
            continue
        cont = [(c.term, c.cont) for c in iter_cont(t) if not isinstance(c, Final)]
        hist = [(c.term, c.cont) for c in iter_hist(t) if not isinstance(c, Final)]
        assert cont == hist


def test_format_parse_round_trip():
    for seed in range(200):
        t = gen_term(seed, 12)
        assert parse_term(format_term(t)) == t


def test_parse_errors():
    for bad in ["", "(num)", "(num 1", "(frob 1)", "(num 1) (num 2)", "(let 1 (num 1) (num 2))"]:
        with pytest.raises(ValueError):
            parse_term(bad)


def test_format_results():
    assert format_results([2, 1]) == "[2,1]"
    assert format_results([]) == "[]"


def test_golden_terms():
    terms = parse_terms((GOLDEN / "terms.txt").read_text())
    expected = (GOLDEN / "terms.expected").read_text().split()
    assert len(terms) == len(expected)
    for t, want in zip(terms, expected):
        assert format_results(run_cont(t)) == want
        assert format_results(run_hist(t)) == want
