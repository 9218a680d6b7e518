"""Builds the extension module and exercises it from Python.

    python3 python/smoke_test.py
"""

import shutil
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
HERE = Path(__file__).resolve().parent


def build():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "tiso-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    built = ROOT / "target" / "release" / "libtiso_py.so"
    shutil.copy(built, HERE / "tiso_py.so")


def main():
    build()
    sys.path.insert(0, str(HERE))
    import tiso_py

    r = tiso_py.Rect(2, 3)
    assert repr(r) == "Rect(2, 3)"
    assert len(r.partitions()) == 10
    assert r.base_point() == ([3, 0], [0, 2, 4])
    assert r.tau([3, 0], [0, 2, 4], "+e2-d1") == ([3, 2], [3, 2, 4])
    assert r.x([3, 1]) == ([5, 6], [6, 5, 7])
    assert r.dual([3, 1]) == [2, 1, 1]
    assert r.word([3, 1]) == "rdrrd"
    assert r.recover_a([5, 6], [6, 5, 7]) == [3, 1]
    assert len(r.class_members([3, 1], 0)) == 5
    assert r.x_hat([2, 0], 2) == ([5, 6], [6, 5, 7])
    assert r.verify_window(0, 6)
    assert r.orbit_size([3, 0], [0, 2, 4], "+3/2") == (4, True)
    size, closed = r.orbit_size([3, 0], [0, 2, 4], max_vertices=500)
    assert (size, closed) == (500, False)

    try:
        r.apply_t([1, 3], "+e1-d1")
    except ValueError as e:
        assert "weakly decreasing" in str(e)
    else:
        raise AssertionError("invalid partition accepted")
    try:
        tiso_py.Rect(2, 4).x([0, 0])
    except ValueError:
        pass
    else:
        raise AssertionError("non-coprime rectangle accepted")

    print("python smoke test ok")


if __name__ == "__main__":
    main()
