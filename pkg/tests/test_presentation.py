"""Tests for CSV output, run manifests and gnuplot scripts."""

import yaml

from slep_pulse.presentation import (
    GnuplotScripts,
    ResultWriter,
    build_manifest,
    format_float,
    sha256_file,
    verify_manifest,
    write_manifest,
)


class TestResultWriter:
    def test_csv_layout(self, tmp_path):
        writer = ResultWriter(tmp_path / "out")
        path = writer.write_csv("a.csv", ("x", "flag"), [(0.1, True), (2, False)], {"alpha": 1.0})
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines == ["# alpha = 1", "x,flag", "0.10000000000000001,true", "2,false"]
        assert writer.files == [path]

    def test_round_trip_precision(self):
        value = 0.1 + 0.2
        assert float(format_float(value)) == value

    def test_register_once(self, tmp_path):
        writer = ResultWriter(tmp_path)
        writer.write_text("note.txt", "one\n")
        writer.write_text("note.txt", "two\n")
        writer.register(tmp_path / "note.txt")
        assert len(writer.files) == 1

    def test_nested_names(self, tmp_path):
        writer = ResultWriter(tmp_path)
        path = writer.write_text("sub/dir/file.txt", "x\n")
        assert path.is_file()


class TestManifest:
    def _run_dir(self, tmp_path):
        writer = ResultWriter(tmp_path)
        writer.write_text("a.txt", "alpha\n")
        writer.write_text("sub/b.txt", "beta\n")
        manifest = build_manifest("pulse", {"run": {"seed": 0}}, writer.files, writer.out_dir, 0.5)
        write_manifest(manifest, tmp_path)
        return manifest

    def test_relative_paths_and_digests(self, tmp_path):
        manifest = self._run_dir(tmp_path)
        assert [f.path for f in manifest.files] == ["a.txt", "sub/b.txt"]
        assert manifest.files[0].sha256 == sha256_file(tmp_path / "a.txt")
        assert manifest.files[0].size == 6

    def test_yaml_content(self, tmp_path):
        self._run_dir(tmp_path)
        data = yaml.safe_load((tmp_path / "manifest.yml").read_text(encoding="utf-8"))
        assert data["command"] == "pulse"
        assert data["config"] == {"run": {"seed": 0}}
        assert len(data["files"]) == 2

    def test_verify_intact(self, tmp_path):
        self._run_dir(tmp_path)
        assert verify_manifest(tmp_path) == []

    def test_verify_detects_changes(self, tmp_path):
        self._run_dir(tmp_path)
        (tmp_path / "a.txt").write_text("changed\n", encoding="utf-8")
        (tmp_path / "sub" / "b.txt").unlink()
        problems = verify_manifest(tmp_path)
        assert "digest mismatch for a.txt" in problems
        assert "missing sub/b.txt" in problems

    def test_verify_without_manifest(self, tmp_path):
        assert verify_manifest(tmp_path) == ["missing manifest.yml"]


class TestGnuplotScripts:
    def test_scripts_reference_their_csv(self):
        scripts = GnuplotScripts()
        assert "'pulse.csv'" in scripts.pulse("pulse.csv", 0.3)
        assert "'eigen_path.csv'" in scripts.trace("eigen_path.csv")
        assert "'trajectory.csv'" in scripts.simulate("trajectory.csv", "(3, 2): standing")
        assert "'dispersion.csv'" in scripts.spectrum("dispersion.csv")

    def test_diagram_without_regions(self):
        script = GnuplotScripts().diagram("d.csv", "h.csv", "c.csv", None)
        assert "region" not in script
        assert "'h.csv'" in script
