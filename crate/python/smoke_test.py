"""Smoke test for the ziptensor extension module.

Build first:  pip install --no-build-isolation ./crates/python
"""

import json

import ziptensor as zt


def main():
    t = zt.build_tensor(3, 2)
    assert t.to_text() == "11\n01"
    assert t.rows == [[3, 1], [2, 2]] and t.cols == [[2, 1], [1, 2]]
    assert zt.Tensor.from_json(t.to_json()) == t

    t53 = zt.Tensor(5, 3)
    assert t53.unit_count() == 20
    assert t53.to_text("bullets").splitlines()[2] == "∘∘•∘••"
    assert t53.zero_cells() == zt.predicted_zeros(5, 3)

    assert zt.zipper([3, 1], [2, 1]) == "0001101"
    assert zt.unzip("0001101") == ([3, 1], [2, 1])
    assert zt.decode("0001101") == "(())()"
    assert zt.encode("(())()") == "0001101"
    assert [zt.count_trees(k) for k in range(2, 9)] == [2, 5, 14, 42, 132, 429, 1430]

    assert zt.rotate("00011", 2) == "01100"
    assert zt.comp_reverse("00011") == "00111"
    assert zt.canonical_tree_word("11000") == "00011"
    words = [w for w, size in zt.enumerate_orbits(3)]
    assert words == ["0000111", "0001101", "0001011", "0010011", "0010101"]

    assert zt.strips(8, 4, 2) == [1, 3, 6, 10, 15]
    assert sorted(side for _, _, side, _ in zt.disjoint_staircases(5, 3)) == [1, 5]
    assert zt.Tensor(6, 3).anti_transpose() == zt.Tensor(6, 4)

    passed, report = zt.verify(["catalan", "zeros"], 8)
    assert passed and json.loads(report)["passed"]

    try:
        zt.build_tensor(99, 3)
    except ValueError as e:
        assert "capacity" in str(e)
    else:
        raise AssertionError("expected a capacity error")

    print("smoke test passed")


if __name__ == "__main__":
    main()
