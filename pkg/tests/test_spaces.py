import json
from fractions import Fraction

import numpy as np
import pytest

from core.errors import CapacityError, ConfigError, PreconditionError
from spaces.dense_nets import BinaryExpansion, DyadicEnumeration, Region, dyadic_net
from spaces.ingest import read_matrix_json, read_points_csv, read_points_json
from spaces.metric_spaces import EuclideanSpace, MatrixSpace, SequenceSpace, check_metric_axioms, diameter


class TestMetricSpaces:
    def test_line_distances_stay_exact(self, line):
        assert line.distance(Fraction(1, 3), Fraction(1, 7)) == Fraction(4, 21)

    def test_sequence_space(self):
        space = SequenceSpace()
        assert space.distance("0101", "0110") == Fraction(1, 4)
        assert space.distance("0101", "0101") == 0
        with pytest.raises(PreconditionError):
            space.distance("01a", "0")

    def test_dimension_mismatch(self):
        with pytest.raises(PreconditionError):
            EuclideanSpace(2).distance((0, 0), (1, 2, 3))

    def test_matrix_space_rejects_negative_entries(self):
        with pytest.raises(PreconditionError):
            MatrixSpace([[0, -1], [-1, 0]])

    def test_diameter(self, line):
        assert diameter(line, [Fraction(1, 3), 0, 1]) == 1
        assert diameter(EuclideanSpace(2), [(0, 0)]) == 0
        with pytest.raises(PreconditionError):
            diameter(line, [])


class TestAxiomSweep:
    def test_euclidean_plane_passes(self, rng):
        points = [tuple(p) for p in rng.uniform(-1, 1, size=(50, 2))]
        report = check_metric_axioms(EuclideanSpace(2), points, samples=10_000)
        assert report.passed

    def test_sequence_space_passes(self, rng):
        words = ["".join(map(str, rng.integers(0, 2, size=8))) for _ in range(40)]
        assert check_metric_axioms(SequenceSpace(), words, samples=10_000).passed

    def test_broken_triangle_is_reported(self):
        space = MatrixSpace([[0, 1, 5], [1, 0, 1], [5, 1, 0]])
        report = check_metric_axioms(space, space.points, samples=10_000)
        triangle = report.check("triangle")[0]
        assert not triangle.passed
        assert triangle.witness is not None
        assert report.check("symmetry")[0].passed


class TestDenseNets:
    def test_decode(self):
        enumeration = DyadicEnumeration(Region.interval())
        assert enumeration.decode("01") == Fraction(1, 2)
        # indices past 2**m clamp to the upper end
        assert enumeration.decode("11") == 1
        with pytest.raises(PreconditionError):
            enumeration.decode("")

    def test_candidates_within(self):
        enumeration = DyadicEnumeration(Region.interval())
        assert enumeration.candidates_within(Fraction(1, 3), -3) == [("001", 2)]

    def test_candidates_for_long_expansions(self):
        enumeration = DyadicEnumeration(Region.interval())
        x = BinaryExpansion("01" * 2048)
        found = enumeration.candidates_within(x, -4096)
        assert found
        for word, level in found:
            assert abs(enumeration.decode(word) - x.to_fraction()) <= Fraction(1, 2 ** 4096)
            assert len(word) == level + 1

    def test_interval_net(self):
        assert dyadic_net(Region.interval(), Fraction(1, 4)).points() == [0, Fraction(1, 2), 1]

    def test_square_net(self):
        net = dyadic_net(Region.box([(0, 1), (0, 1)]), Fraction(1, 2))
        assert len(net) == 9
        assert len(net.codewords()) == 9

    def test_net_cap(self):
        with pytest.raises(CapacityError):
            dyadic_net(Region.interval(), Fraction(1, 2 ** 30), cap=1000)

    def test_binary_expansion(self):
        assert BinaryExpansion("011").to_fraction() == Fraction(3, 8)
        with pytest.raises(PreconditionError):
            BinaryExpansion("012")


class TestIngest:
    def test_csv_with_header(self, tmp_path):
        path = tmp_path / "points.csv"
        path.write_text("x\n0.25\n1/7\n")
        assert read_points_csv(path) == [Fraction(1, 4), Fraction(1, 7)]

    def test_csv_plane(self, tmp_path):
        path = tmp_path / "plane.csv"
        path.write_text("0,0\n1,0.5\n")
        assert read_points_csv(path) == [(0, 0), (1, Fraction(1, 2))]

    def test_csv_rejects_nan(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("0.5\nnan\n")
        with pytest.raises(ConfigError):
            read_points_csv(path)

    def test_json_points(self, tmp_path):
        path = tmp_path / "points.json"
        path.write_text(json.dumps([0.5, "1/3"]))
        assert read_points_json(path) == [Fraction(1, 2), Fraction(1, 3)]

    def test_json_ragged_rows(self, tmp_path):
        path = tmp_path / "ragged.json"
        path.write_text(json.dumps([[0, 1], [2]]))
        with pytest.raises(ConfigError):
            read_points_json(path)

    def test_matrix(self, tmp_path):
        path = tmp_path / "matrix.json"
        path.write_text(json.dumps([[0, 1], [1, 0]]))
        space = read_matrix_json(path)
        assert space.points == [0, 1]
        assert np.array_equal(space.within([0], [0, 1], 1), np.array([[True, False]]))

    def test_matrix_not_square(self, tmp_path):
        path = tmp_path / "matrix.json"
        path.write_text(json.dumps([[0, 1], [1]]))
        with pytest.raises(ConfigError):
            read_matrix_json(path)
