import json
from math import comb

import pytest

import pflyub.lyubeznik as ly
from pflyub.cli import main
from pflyub.errors import PathMismatchError, TableInvariantError
from pflyub.lyubeznik import (
    L_closed,
    L_composed,
    LyubeznikTable,
    build_table,
    valid_k_range,
    verify_all,
)
from pflyub.polyring import ONE, BiLaurentPoly


def mono(eq, ew):
    return BiLaurentPoly.monomial(1, eq, ew)


class TestClosedForm:
    def test_published_n6_values(self):
        assert L_closed(6, 1) == mono(0, 5) + mono(5, 9) + mono(9, 9)

    def test_n6_hypersurface(self):
        assert L_closed(6, 2) == mono(14, 14)

    def test_n5_k1(self):
        assert L_closed(5, 1) == mono(0, 5) + mono(3, 7) + mono(7, 7)

    def test_k0_is_one(self):
        for n in range(2, 14):
            assert L_closed(n, 0) == ONE

    def test_even_hypersurface_all_sizes(self):
        for n in (2, 4, 6, 8, 10, 12):
            d = comb(n, 2)
            assert L_closed(n, n // 2 - 1) == mono(d - 1, d - 1)

    def test_range_validation(self):
        with pytest.raises(ValueError):
            L_closed(1, 0)
        with pytest.raises(ValueError):
            L_closed(6, 3)
        with pytest.raises(ValueError):
            L_closed(7, -1)


class TestComposedPath:
    def test_matches_closed_n6(self):
        assert L_composed(6, 1) == L_closed(6, 1)

    def test_n5_k1_pieces(self):
        # degree-0 simple contributes w^5, the next one (q^3+q^7) w^7
        assert L_composed(5, 1) == mono(0, 5) + mono(3, 7) + mono(7, 7)

    def test_n4_hypersurface_composes_to_special_case(self):
        assert L_composed(4, 1) == mono(5, 5)

    @pytest.mark.parametrize("n", range(2, 14))
    def test_two_paths_agree(self, n):
        for k in valid_k_range(n):
            assert L_closed(n, k) == L_composed(n, k)


class TestBuildTable:
    def test_n6_k1(self):
        table = build_table(6, 1)
        assert table.dim == 9
        assert table.ambient == 15
        assert table.entries == {(0, 5): 1, (5, 9): 1, (9, 9): 1}

    def test_n5_k1(self):
        table = build_table(5, 1)
        assert table.dim == 7
        assert table.entries == {(0, 5): 1, (3, 7): 1, (7, 7): 1}

    def test_n4_k0(self):
        table = build_table(4, 0)
        assert table.dim == 0
        assert table.entries == {(0, 0): 1}

    @pytest.mark.parametrize("n", range(2, 14))
    def test_structural_invariants(self, n):
        for k in valid_k_range(n):
            table = build_table(n, k)
            dim = k * (2 * n - 2 * k - 1)
            assert table.dim == dim
            assert table.entries[(dim, dim)] == 1
            for (i, j), lam in table.entries.items():
                assert lam > 0
                assert 0 <= i <= j <= dim

    def test_mismatch_refused(self, monkeypatch):
        real = ly.L_closed
        monkeypatch.setattr(ly, "L_closed", lambda n, k: real(n, k) + ONE)
        with pytest.raises(PathMismatchError) as err:
            ly.build_table(6, 1)
        assert err.value.exponents == (0, 0)
        assert (err.value.closed, err.value.composed) == (1, 0)

    def test_invariant_violations_located(self):
        bad = LyubeznikTable(n=6, k=1, dim=9, ambient=15, entries={(9, 9): 1, (7, 3): 1})
        with pytest.raises(TableInvariantError, match=r"\(7, 3\)"):
            bad.validate()
        missing_corner = LyubeznikTable(n=6, k=1, dim=9, ambient=15, entries={(0, 5): 1})
        with pytest.raises(TableInvariantError, match="corner"):
            missing_corner.validate()
        negative = LyubeznikTable(n=4, k=0, dim=0, ambient=6, entries={(0, 0): -1})
        with pytest.raises(TableInvariantError, match="positive"):
            negative.validate()


class TestEmitters:
    def test_json_schema(self):
        obj = build_table(6, 1).to_obj()
        assert obj == {
            "n": 6,
            "k": 1,
            "dim": 9,
            "entries": [
                {"i": 0, "j": 5, "lambda": 1},
                {"i": 5, "j": 9, "lambda": 1},
                {"i": 9, "j": 9, "lambda": 1},
            ],
        }

    def test_csv(self):
        assert build_table(6, 1).to_csv() == "i,j,lambda\n0,5,1\n5,9,1\n9,9,1\n"

    def test_latex(self):
        out = build_table(6, 1).to_latex()
        assert out.startswith(r"\begin{tabular}")
        assert out.rstrip().endswith(r"\end{tabular}")
        assert "$9$ & $0$ & $1$" in out  # row i=9: lambda_{9,5}=0, lambda_{9,9}=1


class TestVerifyAll:
    def test_degenerate_range(self):
        report = verify_all(2)
        assert report["pass"] is True
        names = [s["name"] for s in report["suites"]]
        assert "two_path_tables" in names

    def test_corrupted_closed_form_is_located(self, monkeypatch):
        real = ly.L_closed

        def corrupted(n, k):
            out = real(n, k)
            if (n, k) == (6, 1):
                out = out + mono(1, 2)
            return out

        monkeypatch.setattr(ly, "L_closed", corrupted)
        report = ly.verify_all(7)
        assert report["pass"] is False
        suite = next(s for s in report["suites"] if s["name"] == "two_path_tables")
        assert suite["pass"] is False
        assert "L(6,1)" in suite["error"]
        assert "q^1*w^2" in suite["error"]
        # the other suites still ran
        assert all(s["pass"] for s in report["suites"] if s["name"] != "two_path_tables")

    def test_full_range(self):
        report = verify_all(13)
        assert report["pass"] is True
        assert all(s["error"] is None for s in report["suites"])

    def test_parallel_matches_serial(self):
        serial = verify_all(8)
        parallel = verify_all(8, jobs=4)
        assert serial["pass"] and parallel["pass"]
        two_path = lambda r: next(s for s in r["suites"] if s["name"] == "two_path_tables")
        assert two_path(serial)["checked"] == two_path(parallel)["checked"]

    def test_bad_n_max(self):
        with pytest.raises(ValueError):
            verify_all(1)


class TestCli:
    def test_table_json(self, capsys):
        assert main(["lyubeznik", "--n", "6", "--k", "1"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["dim"] == 9
        assert {"i": 5, "j": 9, "lambda": 1} in out["entries"]

    def test_table_csv(self, capsys):
        assert main(["lyubeznik", "--n", "5", "--k", "1", "--format", "csv"]) == 0
        assert capsys.readouterr().out == "i,j,lambda\n0,5,1\n3,7,1\n7,7,1\n"

    def test_table_latex(self, capsys):
        assert main(["lyubeznik", "--n", "4", "--k", "1", "--format", "latex"]) == 0
        assert r"\begin{tabular}" in capsys.readouterr().out

    def test_genfun(self, capsys):
        assert main(["genfun", "--n", "6", "--k", "2"]) == 0
        assert json.loads(capsys.readouterr().out) == [{"eq": 14, "ew": 14, "c": 1}]

    def test_localcoh(self, capsys):
        assert main(["localcoh", "--parity", "odd", "--m", "2", "--object", "D", "--index", "1"]) == 0
        assert json.loads(capsys.readouterr().out) == [
            {"eq": 3, "ew": 0, "c": 1},
            {"eq": 7, "ew": 0, "c": 1},
        ]

    def test_localcoh_bad_combination(self, capsys):
        assert main(["localcoh", "--parity", "odd", "--m", "2", "--object", "Q", "--index", "0"]) == 2

    def test_gaussian(self, capsys):
        assert main(["gaussian", "--a", "2", "--b", "1", "--power", "4"]) == 0
        assert json.loads(capsys.readouterr().out) == [
            {"eq": 0, "ew": 0, "c": 1},
            {"eq": 4, "ew": 0, "c": 1},
        ]

    def test_bott_nonzero(self, capsys):
        # leading-dash values need the = form
        assert main(["bott", "--gamma=-3,-3,0"]) == 0
        assert capsys.readouterr().out.strip() == "degree 2, weight -2,-2,-2"

    def test_bott_zero(self, capsys):
        assert main(["bott", "--gamma=-1,-1,0"]) == 0
        assert capsys.readouterr().out.strip() == "zero"

    def test_verify_small(self, capsys):
        assert main(["verify", "--n-max", "4"]) == 0
        out = capsys.readouterr().out
        assert "two_path_tables: PASS" in out

    def test_argument_errors_exit_2(self, capsys):
        assert main(["lyubeznik", "--n", "6", "--k", "9"]) == 2
        assert main(["gaussian", "--a", "1", "--b", "2"]) == 2
        assert main(["bott", "--gamma", "not,numbers"]) == 2

    def test_verification_failure_exits_1(self, capsys, monkeypatch):
        real = ly.L_closed
        monkeypatch.setattr(
            ly, "L_closed", lambda n, k: real(n, k) + (ONE if (n, k) == (4, 1) else 0)
        )
        assert main(["verify", "--n-max", "4"]) == 1
        assert "two_path_tables: FAIL" in capsys.readouterr().out
