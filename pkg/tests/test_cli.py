import json
import subprocess
import sys
from pathlib import Path

import pytest

from thicksat import document
from thicksat.cli import main
from thicksat.drawing import Drawing
from thicksat.geom import circle_points, point

DEMO = Path(__file__).resolve().parent.parent / "data" / "extension_demo.json"


def write(path, data):
    path.write_text(json.dumps(data))
    return str(path)


def test_zigzag_and_validate(tmp_path, capsys):
    out = str(tmp_path / "z.json")
    assert main(["zigzag", "--n", "8", "--k", "3", "--out", out, "--svg", str(tmp_path / "z.svg")]) == 0
    assert "21 edges" in capsys.readouterr().out
    assert main(["validate", out]) == 0
    assert (tmp_path / "z.svg").read_text().startswith("<?xml")


def test_zigzag_refusal(tmp_path, capsys):
    assert main(["zigzag", "--n", "6", "--k", "4", "--out", str(tmp_path / "q.json")]) == 1
    assert "k <= n/2" in capsys.readouterr().err


def test_zigzag_seven_two(tmp_path):
    out = tmp_path / "z.json"
    assert main(["zigzag", "--n", "7", "--k", "2", "--out", str(out)]) == 0
    assert len(document.load(out).drawing.edges) == 15


def test_validate_crossing_and_parse_error(tmp_path, capsys):
    k4 = write(tmp_path / "k4.json", {"version": "1", "k": 1,
                                       "vertices": [[0, 0], [4, 0], [4, 4], [0, 4]],
                                       "edges": [[0, 1, 1], [1, 2, 1], [2, 3, 1], [0, 3, 1], [0, 2, 1], [1, 3, 1]]})
    assert main(["validate", k4]) == 1
    out = capsys.readouterr().out
    assert out.count("monochromatic-crossing") == 1
    bad = write(tmp_path / "bad.json", {"version": "1", "k": 1, "vertices": [["1/0", 0]], "edges": []})
    assert main(["validate", bad]) == 2
    assert main(["validate", str(tmp_path / "missing.json")]) == 2


def test_validate_uncolored_finds_coloring(tmp_path):
    f = write(tmp_path / "k4.json", {"k": 2, "vertices": [[0, 0], [4, 0], [4, 4], [0, 4]],
                                      "edges": [[0, 2], [1, 3]]})
    assert main(["validate", f]) == 0
    assert main(["validate", f, "--k", "1"]) == 1


def test_saturate_convex_and_nonconvex(tmp_path, capsys):
    hexagon, four = tmp_path / "h.json", tmp_path / "f.json"
    document.dump(hexagon, Drawing(circle_points(6), frozenset(), 2))
    document.dump(four, Drawing((point(0, 0), point(6, 0), point(2, 5), point(3, 2)), frozenset(), 2))
    out = tmp_path / "o.json"
    assert main(["saturate", str(hexagon), "--mode", "precolored", "--out", str(out)]) == 0
    assert len(document.load(out).drawing.edges) == 12
    assert main(["saturate", str(four), "--mode", "precolored", "--out", str(out)]) == 0
    assert len(document.load(out).drawing.edges) >= 6
    capsys.readouterr()
    assert main(["saturate", str(out), "--mode", "free", "--out", str(tmp_path / "p.json")]) == 0
    assert "already saturated" in capsys.readouterr().out


def test_saturate_inconclusive(tmp_path):
    f = tmp_path / "k9.json"
    n = 9
    document.dump(f, Drawing(circle_points(n), frozenset((u, v) for u in range(n) for v in range(u + 1, n)), 4))
    assert main(["saturate", str(f), "--mode", "free", "--budget", "3", "--out", str(tmp_path / "o.json")]) == 3


def test_enumerate(tmp_path, capsys):
    assert main(["enumerate", "--n", "5", "--k", "2", "--mode", "free"]) == 0
    out = capsys.readouterr().out
    assert "min edges" in out and " 9" in out
    w = tmp_path / "w.json"
    assert main(["enumerate", "--n", "6", "--k", "3", "--mode", "free", "--witness-out", str(w)]) == 0
    assert main(["validate", str(w)]) == 0
    assert main(["enumerate", "--n", "12", "--k", "2", "--mode", "free"]) == 1
    assert "cap" in capsys.readouterr().err


def test_extend_small(tmp_path, capsys):
    sq = write(tmp_path / "sq.json", {"k": 2, "vertices": [[0, 0], [5, 1], [6, 6], [1, 5]],
                                       "edges": [[0, 2, 2]]})
    assert main(["extend", sq]) == 0
    assert "cells:                  2" in capsys.readouterr().out
    blue = write(tmp_path / "b.json", {"k": 2, "vertices": [[0, 0], [5, 1], [6, 6], [1, 5]],
                                        "edges": [[0, 2, 1]]})
    assert main(["extend", blue]) == 0
    assert "cells:                  1" in capsys.readouterr().out
    k3 = write(tmp_path / "k3.json", {"k": 3, "vertices": [[0, 0], [5, 1], [6, 6]], "edges": []})
    assert main(["extend", k3]) == 1


def test_extend_demo(tmp_path):
    svg_path = tmp_path / "demo.svg"
    res = subprocess.run([sys.executable, "-m", "thicksat", "extend", str(DEMO), "--out-svg", str(svg_path)],
                         capture_output=True, text=True)
    assert res.returncode == 0, res.stderr
    assert "cells:                  8" in res.stdout
    assert "added red diagonals:    7" in res.stdout
    text = svg_path.read_text()
    assert '<g id="extensions"' in text and '<g id="cells"' in text and text.count("<polygon") == 8


@pytest.mark.parametrize("argv", [["zigzag", "--n", "8"], ["nope"]])
def test_argparse_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
