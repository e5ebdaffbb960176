"""Command-line interface tests: subcommands, config precedence, errors."""

import csv
import json

import numpy as np
import pytest

from splinefill import cli
from splinefill.imagecore import ImageGrid, load_image, save_image, save_mask
from splinefill.maskgen import LineMaskSpec, generate_mask


@pytest.fixture
def workdir(tmp_path, rng):
    save_image(ImageGrid(np.full((32, 32, 1), 0.42)), tmp_path / "in.png")
    save_mask(generate_mask(32, 32, LineMaskSpec(seed=1)), tmp_path / "mask.png")
    return tmp_path


class TestParseRange:
    def test_pair(self):
        assert cli.parse_range("2..5") == (2, 5)

    def test_bare_integer(self):
        assert cli.parse_range("7") == (7, 7)

    def test_empty_range(self):
        with pytest.raises(ValueError):
            cli.parse_range("5..2")

    def test_garbage(self):
        with pytest.raises(ValueError):
            cli.parse_range("abc")


class TestConfigFile:
    def test_parses_values_and_comments(self, tmp_path):
        cfg = tmp_path / "c.cfg"
        cfg.write_text(
            "# engine settings\n"
            "k-total = 6   # hyphens work too\n"
            "edge_threshold=0.3\n"
            "\n"
        )
        got = cli.parse_config_file(cfg, {"k_total", "edge_threshold"})
        assert got == {"k_total": "6", "edge_threshold": "0.3"}

    def test_unknown_key_rejected(self, tmp_path):
        cfg = tmp_path / "c.cfg"
        cfg.write_text("bogus = 1\n")
        with pytest.raises(ValueError, match="bogus"):
            cli.parse_config_file(cfg, {"k_total"})

    def test_missing_equals_rejected(self, tmp_path):
        cfg = tmp_path / "c.cfg"
        cfg.write_text("just a line\n")
        with pytest.raises(ValueError):
            cli.parse_config_file(cfg, {"k_total"})


class TestInpaintCommand:
    def test_valid_triple(self, workdir, capsys):
        rc = cli.run([
            "inpaint",
            "--image", str(workdir / "in.png"),
            "--mask", str(workdir / "mask.png"),
            "--out", str(workdir / "out.png"),
        ])
        assert rc == 0
        # constant input: restoration must reproduce it exactly
        out = load_image(workdir / "out.png")
        assert np.array_equal(out.data, load_image(workdir / "in.png").data)

    def test_missing_file_fails_cleanly(self, workdir, capsys):
        rc = cli.run([
            "inpaint",
            "--image", str(workdir / "absent.png"),
            "--mask", str(workdir / "mask.png"),
            "--out", str(workdir / "out.png"),
        ])
        assert rc == 1
        assert "error:" in capsys.readouterr().err

    def test_bad_flag_value(self, workdir, capsys):
        rc = cli.run([
            "inpaint",
            "--image", str(workdir / "in.png"),
            "--mask", str(workdir / "mask.png"),
            "--out", str(workdir / "out.png"),
            "--k-total", "3",
        ])
        assert rc == 1


class TestMaskGenCommand:
    def test_deterministic_bytes(self, tmp_path):
        args = lambda name: [
            "mask-gen", "--width", "48", "--height", "32",
            "--out", str(tmp_path / name), "--seed", "11",
        ]
        assert cli.run(args("a.png")) == 0
        assert cli.run(args("b.png")) == 0
        assert (tmp_path / "a.png").read_bytes() == (tmp_path / "b.png").read_bytes()

    def test_flags_shape_output(self, tmp_path):
        rc = cli.run([
            "mask-gen", "--width", "64", "--height", "64",
            "--out", str(tmp_path / "m.png"), "--seed", "0",
            "--lines", "2", "--thickness", "1..1", "--length", "4..6",
        ])
        assert rc == 0
        from splinefill.imagecore import load_mask

        m = load_mask(tmp_path / "m.png")
        assert 0 < int(m.missing.sum()) <= 2 * 6

    def test_seed_required(self, tmp_path):
        with pytest.raises(SystemExit):
            cli.run([
                "mask-gen", "--width", "64", "--height", "64",
                "--out", str(tmp_path / "m.png"),
            ])


class TestBenchCommand:
    @pytest.fixture
    def dataset(self, tmp_path, rng):
        d = tmp_path / "ds"
        d.mkdir()
        for i in range(3):
            save_image(ImageGrid(rng.random((48, 48, 1))), d / f"img{i}.png")
        return d

    def test_csv_and_summary(self, dataset, tmp_path):
        out_csv = tmp_path / "rows.csv"
        out_json = tmp_path / "summary.json"
        rc = cli.run([
            "bench", "--dataset", str(dataset),
            "--out-csv", str(out_csv), "--out-json", str(out_json),
        ])
        assert rc == 0
        with open(out_csv) as fh:
            rows = list(csv.reader(fh))
        assert len(rows) == 1 + 3 * 3  # header + 3 images x 3 methods
        summary = json.loads(out_json.read_text())
        assert set(summary) == {"spline", "nearest", "linear"}

    def test_multiple_seeds(self, dataset, tmp_path):
        out_csv = tmp_path / "rows.csv"
        rc = cli.run([
            "bench", "--dataset", str(dataset),
            "--out-csv", str(out_csv), "--seeds", "0,1",
        ])
        assert rc == 0
        with open(out_csv) as fh:
            rows = list(csv.reader(fh))
        assert len(rows) == 1 + 3 * 2 * 3


class TestPrecedence:
    def test_flag_beats_config_beats_default(self, workdir):
        cfg = workdir / "c.cfg"
        cfg.write_text("k-total = 6\nmax-passes = 2\n")
        parser = cli.build_parser()
        args = parser.parse_args([
            "inpaint", "--image", "x", "--mask", "y", "--out", "z",
            "--config", str(cfg), "--k-total", "2",
        ])
        opts = cli._resolve(args, ["k_total", "edge_threshold", "max_passes"])
        assert opts["k_total"] == 2  # flag wins
        assert opts["max_passes"] == 2  # config wins over default
        assert opts["edge_threshold"] == 0.15  # default

    def test_config_types_converted(self, workdir):
        cfg = workdir / "c.cfg"
        cfg.write_text("thickness = 2..4\nseed = 9\n")
        parser = cli.build_parser()
        args = parser.parse_args([
            "mask-gen", "--width", "32", "--height", "32",
            "--out", "m.png", "--seed", "1", "--config", str(cfg),
        ])
        opts = cli._resolve(args, ["lines", "thickness", "length", "seed"])
        assert opts["thickness"] == (2, 4)
        assert opts["seed"] == 1  # explicit flag beats the config value


class TestTopLevel:
    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.run(["--version"])
        assert exc.value.code == 0
        assert "splinefill" in capsys.readouterr().out

    def test_unknown_command(self):
        with pytest.raises(SystemExit):
            cli.run(["frobnicate"])
