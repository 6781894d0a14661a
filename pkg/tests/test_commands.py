import json

import numpy as np
import pytest

from commands import build_command, emit, save
from commands.suites import SUITE_REGISTRY, SuiteRun
from commands.schemas import (
    CuspidalBlock,
    ExpansionRecord,
    MatrixRecord,
    MMatrixRecord,
    OrderEntry,
    OrderRecord,
    SelftestRecord,
    SuiteResult,
    Term,
    ZetaEntry,
    ZetaRecord,
)
from utils.errors import (
    BoundaryError,
    ConsistencyError,
    ParameterError,
    PoleError,
    PrecisionError,
    exit_code_for,
)

from .conftest import ELLIPTIC_Q2, POLY_Q2, POLY_Q3, SHIFTED_Q2


def selftest_record():
    return SelftestRecord(
        ring=POLY_Q2,
        seed=1,
        results=[SuiteResult(suite="rings", ring=POLY_Q2, passed=3, failed=1, failures=["degree 2"])],
        total_passed=3,
        total_failed=1,
    )


# output


def test_emit_formats():
    record = selftest_record()
    table = emit(record, "table")
    assert "results[0].suite" in table
    lines = emit(record, "csv").splitlines()
    assert lines[0] == "key,value"
    assert "results[0].failures,degree 2" in lines
    assert json.loads(emit(record, "json"))["total_failed"] == 1
    with pytest.raises(ParameterError):
        emit(record, "yaml")


def test_save(tmp_path):
    record = selftest_record()
    assert save(record, "json", "") is None
    fpath = save(record, "csv", str(tmp_path / "out"))
    assert fpath.endswith("selftest.csv")
    with open(fpath) as f:
        assert f.readline().strip() == "key,value"


@pytest.mark.parametrize(
    "record",
    [
        ZetaRecord(
            ring=ELLIPTIC_Q2,
            rank=2,
            curve_numerator="1 + 2*S^2",
            class_number=3,
            zetas=[ZetaEntry(label="Z_A", function="(1 + 2*S^2)/(1 - 2*S)", coefficients=["1", "2"], special_value="-3")],
            l_values={"chi(0; m=3)": "-3"},
        ),
        OrderRecord(
            ring=ELLIPTIC_Q2,
            rank=2,
            mode="discriminant",
            entries=[OrderEntry(target="Delta", boundary_class="O", order="6", unit="u", zeta_values={"Z_(O)": "-5/3"})],
            divisor="6*(O) + 1*((0,0)) + 2*((0,1))",
        ),
        MatrixRecord(
            ring=ELLIPTIC_Q2,
            rank=2,
            mode="both",
            cuspidal=CuspidalBlock(b="A", rows=["O"], columns=["A"], entries=[[25]], determinant=25, index=25),
            mmatrices=[
                MMatrixRecord(
                    k=1,
                    precision=4,
                    degree_bound=3,
                    reps=["A"],
                    valuations=[[0]],
                    diagonal_residues=[1],
                    det_residue=1,
                    verdict="PASS",
                )
            ],
        ),
        ExpansionRecord(
            ring=POLY_Q2,
            q=2,
            precision=8,
            weight=3,
            pi_bar_exponent=3,
            product_route=[Term(exponent=1, coefficient="1")],
            verdict="EQUAL",
            leading="(1)*t^1",
        ),
        selftest_record(),
    ],
)
def test_records_survive_json(record):
    assert type(record).model_validate_json(emit(record, "json")) == record


# errors


def test_exit_codes():
    assert exit_code_for(ParameterError("x")) == 2
    assert exit_code_for(PoleError("x")) == 2
    assert exit_code_for(ConsistencyError("x")) == 3
    assert exit_code_for(PrecisionError("x")) == 4
    assert exit_code_for(BoundaryError("x")) == 1
    assert exit_code_for(KeyError("RING.NOPE")) == 2
    assert exit_code_for(RuntimeError("x")) == 1


# config


def test_setup_cfg_layers(cfg_factory):
    cfg = cfg_factory(ring=ELLIPTIC_Q2, r=3, format="json", opts=["ENUM.MAX_DIM", "15"])
    assert cfg.RING.SPEC == ELLIPTIC_Q2
    assert cfg.RANK == 3
    assert cfg.FORMAT == "json"
    # the per-family overrides come last
    assert cfg.ENUM.MAX_DIM == 12
    assert cfg.IDEAL.X == ""
    assert cfg.ZETA.CHECK_DEGREE == 6
    # the project nodes extend the dassl defaults
    assert "TRAINER" in cfg
    assert cfg.OUTPUT_DIR == ""
    assert cfg.SELFTEST.SUITES[-1] == "counting"
    cfg = cfg_factory(ring=ELLIPTIC_Q2, no_ring_defaults=True, opts=["ENUM.MAX_DIM", "15"])
    assert cfg.ENUM.MAX_DIM == 15


def test_setup_cfg_from_files(cfg_factory, tmp_path):
    ring_file = tmp_path / "ring.yaml"
    ring_file.write_text("RING:\n  SPEC: poly q=3\n")
    command_file = tmp_path / "command.yaml"
    command_file.write_text("COMMAND:\n  NAME: Orders\nORDERS:\n  MODE: canonical\n")
    cfg = cfg_factory(ring_config_file=str(ring_file), config_file=str(command_file), seed=7)
    assert cfg.RING.SPEC == "poly q=3"
    assert cfg.COMMAND.NAME == "Orders"
    assert cfg.ORDERS.MODE == "canonical"
    assert cfg.SEED == 7
    assert cfg.is_frozen()


def test_unknown_config_keys_are_rejected(cfg_factory, tmp_path):
    bad = tmp_path / "bad.yaml"
    bad.write_text("RING:\n  NOPE: 1\n")
    with pytest.raises(KeyError) as info:
        cfg_factory(config_file=str(bad))
    assert exit_code_for(info.value) == 2
    with pytest.raises(AssertionError) as info:
        cfg_factory(opts=["RING.NOPE", "1"])
    assert exit_code_for(info.value) == 2


# commands


def test_unknown_command(cfg_factory):
    with pytest.raises(ValueError):
        build_command(cfg_factory(command="Nope"))


def test_rank_is_validated(cfg_factory):
    with pytest.raises(ParameterError):
        build_command(cfg_factory(command="Zeta", r=1))


def test_zeta_command(cfg_factory, tmp_path):
    cfg = cfg_factory(ring=ELLIPTIC_Q2, command="Zeta", format="json", output_dir=str(tmp_path))
    record = build_command(cfg).execute()
    assert record.class_number == 3
    assert record.curve_numerator == "1 + 2*S^2"
    assert record.zetas[0].special_value == "-3"
    assert [z.special_value for z in record.zetas[1:]] == ["-5/3", "-2/3", "-2/3"]
    assert len(record.l_values) == 3
    with open(tmp_path / "zeta.json") as f:
        assert ZetaRecord.model_validate_json(f.read()) == record


def test_zeta_command_over_f2_t(cfg_factory):
    record = build_command(cfg_factory(command="Zeta", output_dir="")).execute()
    assert record.identities == ["(1-q^r)*zeta_A(1-2) = 1"]
    assert record.zetas[0].function == "1/(1 - 2*S)"
    assert record.zetas[0].coefficients[:4] == ["1", "2", "4", "8"]


def test_zeta_command_with_a_coset(cfg_factory):
    cfg = cfg_factory(ring=POLY_Q2, command="Zeta", output_dir="", opts=["IDEAL.X", "T+1", "IDEAL.A", "[T]^2"])
    record = build_command(cfg).execute()
    assert len(record.cosets) == 1
    assert record.cosets[0].lowest_exponent == 0


def test_orders_command(cfg_factory):
    cfg = cfg_factory(ring=ELLIPTIC_Q2, command="Orders", level="P(0,0)", output_dir="")
    record = build_command(cfg).execute()
    assert [e.order for e in record.entries] == ["6", "1", "2"]
    assert [e.boundary_class for e in record.entries] == ["O", "(0,0)", "(0,1)"]
    assert [e.order_t_n for e in record.entries] == ["12", "2", "4"]


def test_orders_command_modes(cfg_factory):
    cfg = cfg_factory(ring=POLY_Q2, command="Orders", level="[T]", output_dir="", opts=["ORDERS.MODE", "division"])
    record = build_command(cfg).execute()
    assert record.aggregation.holds
    assert record.aggregation.sum_all_u == "2"
    cfg = cfg_factory(ring=POLY_Q2, command="Orders", output_dir="", opts=["ORDERS.MODE", "canonical"])
    record = build_command(cfg).execute()
    assert (record.exponents["d"], record.exponents["d_prime"]) == (1, 2)
    with pytest.raises(ParameterError):
        build_command(cfg_factory(command="Orders", opts=["ORDERS.MODE", "bogus"]))


def test_matrix_command(cfg_factory):
    cfg = cfg_factory(ring=ELLIPTIC_Q2, command="Matrix", output_dir="")
    record = build_command(cfg).execute()
    assert record.cuspidal.entries == [[25, 6, 6], [10, 1, 2], [10, 2, 1]]
    assert record.cuspidal.index == 45
    assert record.frobenius.match
    assert record.frobenius.l_product == "-3"
    assert [m.verdict for m in record.mmatrices] == ["PASS", "PASS"]
    assert record.minimal_degree_claim == []


def test_matrix_command_mmatrix_mode(cfg_factory):
    cfg = cfg_factory(ring="shifted q=2 g=T^2+T+1", command="Matrix", output_dir="", opts=["MATRIX.MODE", "mmatrix"])
    record = build_command(cfg).execute()
    assert record.cuspidal is None
    assert [m.k for m in record.mmatrices] == [1, 2]
    assert all(m.verdict == "PASS" for m in record.mmatrices)


def test_expand_command(cfg_factory):
    cfg = cfg_factory(command="Expand", output_dir="", opts=["EXPAND.LEVEL", "T"])
    record = build_command(cfg).execute()
    assert record.verdict == "EQUAL"
    assert record.precision == 8
    assert record.weight == 3
    assert record.product_route == record.eisenstein_route
    assert record.level_relation[0].exponent == 2


def test_expand_needs_a_polynomial_ring(cfg_factory):
    with pytest.raises(ParameterError):
        build_command(cfg_factory(ring=ELLIPTIC_Q2, command="Expand", output_dir="")).execute()
    with pytest.raises(ParameterError):
        build_command(cfg_factory(command="Expand", r=3))


def test_selftest_command(cfg_factory):
    opts = ["SELFTEST.RINGS", '["poly q=2"]', "SELFTEST.SUITES", '["base_arith", "counting"]']
    record = build_command(cfg_factory(command="Selftest", output_dir="", opts=opts)).execute()
    assert record.ok
    assert [r.suite for r in record.results] == ["base_arith", "counting"]
    assert record.total_passed > 0
    with pytest.raises(ParameterError):
        build_command(cfg_factory(command="Selftest", opts=["SELFTEST.SUITES", '["nope"]']))


SUITES = ["base_arith", "rings", "zeta", "boundary", "independence", "expansions", "counting"]


def suite_cases():
    for spec in (POLY_Q2, POLY_Q3, SHIFTED_Q2, ELLIPTIC_Q2):
        for name in SUITES:
            marks = [] if spec == POLY_Q2 and name != "independence" else [pytest.mark.slow]
            yield pytest.param(spec, name, marks=marks, id=f"{name}-{spec}")


@pytest.mark.parametrize("spec, name", suite_cases())
def test_every_suite_passes_on_the_default_rings(cfg_factory, spec, name):
    opts = ["SELFTEST.RINGS", f"['{spec}']", "SELFTEST.SUITES", f"['{name}']"]
    record = build_command(cfg_factory(command="Selftest", opts=opts)).execute()
    assert record.ok
    assert record.total_passed > 0 or name in ("expansions", "counting")


def test_counting_suite_covers_degree_two_levels(poly2):
    run = SuiteRun("counting", poly2)
    SUITE_REGISTRY.get("counting")(run, poly2, np.random.default_rng(0), 20)
    result = run.result()
    # T, T+1 and the four monic quadratics, three checks each
    assert result.failures == []
    assert result.passed == 18


def test_independence_suite_covers_every_weight_multiple(poly2):
    run = SuiteRun("independence", poly2)
    SUITE_REGISTRY.get("independence")(run, poly2, np.random.default_rng(0), 5, weight_multiples=[1, 2])
    result = run.result()
    assert result.failures == []
    # two embedding checks, the lattice sum, the minimal degree claim and two checks per k = q - 1, 2(q - 1)
    assert result.passed == 8


def test_failed_checks_raise_after_the_dump(cfg_factory, monkeypatch, capsys):
    import commands.zeta as zeta_command

    original = zeta_command.class_zetas
    # class zetas attached to the wrong classes contradict the enumeration
    monkeypatch.setattr(zeta_command, "class_zetas", lambda ring: list(reversed(original(ring))))
    cfg = cfg_factory(ring=ELLIPTIC_Q2, command="Zeta", output_dir="")
    with pytest.raises(ConsistencyError):
        build_command(cfg).execute()
    assert "class_number" in capsys.readouterr().out
