import json
from fractions import Fraction

import pytest

from semigrass.schemas import Report, RunConfig

##############
### REPORT ###
##############


def test_exact_values_become_strings():
    big = 2**80 + 1
    report = Report(q=2, n=3, command="count", seed=5, rows=[{"k": 1, "count": big, "measure": Fraction(-3, 4)}])
    assert report.rows[0] == {"k": "1", "count": str(big), "measure": "-3/4"}
    assert report.seed == "5"


def test_bools_and_approx_floats_pass_through():
    report = Report(q=3, command="measure", rows=[{"ok": True, "gap_approx": 0.25}])
    assert report.rows[0] == {"ok": True, "gap_approx": 0.25}


def test_floats_need_approx_suffix():
    with pytest.raises(ValueError):
        Report(q=2, command="measure", rows=[{"gap": 0.1}])


def test_unknown_command():
    with pytest.raises(ValueError):
        Report(q=2, command="plot")


def test_columns_in_first_seen_order():
    report = Report(q=2, command="count", rows=[{"k": 0, "a": 1}, {"k": "all", "b": 2}, {"a": 3}])
    assert report.columns == ["k", "a", "b"]


def test_to_json_is_stable():
    report = Report(q=2, command="count", rows=[{"k": 0, "orbit_count": 1}])
    text = report.to_json()
    assert text.endswith("}\n")
    assert json.loads(text) == {
        "command": "count",
        "n": None,
        "q": 2,
        "rows": [{"k": "0", "orbit_count": "1"}],
        "seed": None,
    }
    assert text == Report(**json.loads(text)).to_json()


def test_to_csv_fills_missing_cells():
    report = Report(q=2, command="measure", rows=[{"k": 0, "w": Fraction(1, 2)}, {"k": "limit", "total_approx": 0.5}])
    assert report.render("csv") == "k,w,total_approx\n0,1/2,\nlimit,,0.5\n"


##################
### RUN CONFIG ###
##################


def test_run_config_defaults():
    cfg = RunConfig()
    assert cfg.q == 2 and cfg.n is None
    assert cfg.format == "json" and cfg.suite == "all"


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9, 25, 49])
def test_prime_powers_accepted(q):
    assert RunConfig(q=q).q == q


@pytest.mark.parametrize(
    "kwargs",
    [{"q": 6}, {"q": 12}, {"q": 1}, {"q": 2**17}, {"n": -1}, {"K": 0}, {"seed": -1}, {"format": "xml"}, {"colour": "red"}],
)
def test_run_config_rejects(kwargs):
    with pytest.raises(ValueError):
        RunConfig(**kwargs)


def test_require_n():
    assert RunConfig(n=4).require_n() == 4
    with pytest.raises(ValueError):
        RunConfig().require_n()
