from numradius.numrange import ScanConfig
from numradius.verify import SUITES, run_all, run_suite

FAST = ScanConfig(grid_points=64)


def test_suite_results_independent_of_execution_order():
    alone = run_suite("offdiag_sandwich", seed=3, trials=3, dim=3, cfg=FAST)
    together = {r.name: r for r in run_all(seed=3, trials=3, dim=3, cfg=FAST)}
    assert [r for r in together] == sorted(SUITES)
    assert together["offdiag_sandwich"].passed == alone.passed == 3


def test_corrupted_slack_is_caught_with_operands():
    res = run_suite("contraction", seed=1, trials=2, dim=2, cfg=FAST, slack=-1.0)
    assert res.passed == 0 and len(res.violations) == 2
    v = res.violations[0]
    assert v.trial == 0 and set(v.operands) == {"T", "C"}
    assert v.operands["T"]["rows"] == v.operands["T"]["cols"]


def test_different_seeds_draw_different_operands():
    a = run_suite("contraction", seed=1, trials=1, dim=4, cfg=FAST, slack=-1.0).violations[0].operands
    b = run_suite("contraction", seed=2, trials=1, dim=4, cfg=FAST, slack=-1.0).violations[0].operands
    assert a != b
