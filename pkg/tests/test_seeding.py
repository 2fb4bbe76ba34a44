import numpy as np
import pytest

from spkmeans import seeding
from spkmeans.errors import ConfigError, InfeasibleError
from spkmeans.sparse import Dataset, SparseVector, dot_sparse_dense


def sv(pairs):
    idx, val = zip(*pairs)
    return SparseVector(np.array(idx, dtype=np.int64), np.array(val, dtype=float))


@pytest.fixture()
def antipodal():
    # two antipodal unit vectors along axis 0
    return Dataset.from_rows([sv([(0, 1.0)]), sv([(0, -1.0)])], dim=2)


class TestSeedConfig:
    def test_defaults_valid(self):
        seeding.SeedConfig().validate()

    @pytest.mark.parametrize(
        "kw",
        [
            {"method": "bogus"},
            {"alpha": 0.5},
            {"alpha": 2.5},
            {"chain_length": 0},
        ],
    )
    def test_rejects_bad_values(self, kw):
        with pytest.raises(ConfigError):
            seeding.SeedConfig(**kw).validate()


class TestUniform:
    def test_distinct_unit_centers(self, small_data):
        cs = seeding.init_uniform(small_data, 10, seed=4)
        assert len(set(cs.seed_indices.tolist())) == 10
        norms = np.linalg.norm(cs.centers, axis=1)
        assert np.allclose(norms, 1.0, atol=1e-9)

    def test_k_equals_n(self, five_points_data):
        cs = seeding.init_uniform(five_points_data, 5, seed=0)
        assert sorted(cs.seed_indices.tolist()) == [0, 1, 2, 3, 4]

    def test_deterministic(self, small_data):
        a = seeding.init_uniform(small_data, 5, seed=12)
        b = seeding.init_uniform(small_data, 5, seed=12)
        assert np.array_equal(a.seed_indices, b.seed_indices)
        assert np.array_equal(a.centers, b.centers)

    def test_k_too_large(self, five_points_data):
        with pytest.raises(InfeasibleError):
            seeding.init_uniform(five_points_data, 6, seed=0)

    def test_centers_are_copies(self, five_points_data):
        cs = seeding.init_uniform(five_points_data, 2, seed=0)
        cs.centers[0, 0] = 99.0
        row = five_points_data.rows[int(cs.seed_indices[0])]
        assert row.values[0] != 99.0


class TestKmpp:
    def test_weights_match_from_scratch_recomputation(self, small_data):
        """Every pick's weight vector must equal a brute-force rebuild."""
        for seed in (0, 1, 2):
            trace = []
            cs = seeding.init_kmpp(small_data, 8, alpha=1.0, seed=seed,
                                   trace=trace)
            chosen = cs.seed_indices.tolist()
            for step, w in enumerate(trace, start=1):
                prefix = chosen[:step]
                centers = [small_data.rows[c].densify(small_data.dim)
                           for c in prefix]
                expect = np.array([
                    max(1.0 - max(dot_sparse_dense(r, c) for c in centers), 0.0)
                    for r in small_data.rows
                ])
                expect[prefix] = 0.0
                assert np.array_equal(w, expect), f"seed={seed} pick={step}"

    def test_antipodal_forced_pick(self, antipodal):
        # weight of the unchosen point is 1-(-1)=2 vs 0: forced
        for seed in range(20):
            cs = seeding.init_kmpp(antipodal, 2, alpha=1.0, seed=seed)
            assert set(cs.seed_indices.tolist()) == {0, 1}

    def test_no_duplicates_with_large_alpha(self, five_points_data):
        # alpha = 2 keeps every weight positive; chosen points must still
        # be excluded explicitly
        for seed in range(50):
            cs = seeding.init_kmpp(five_points_data, 5, alpha=2.0, seed=seed)
            assert len(set(cs.seed_indices.tolist())) == 5

    def test_deterministic(self, small_data):
        a = seeding.init_kmpp(small_data, 6, alpha=1.5, seed=77)
        b = seeding.init_kmpp(small_data, 6, alpha=1.5, seed=77)
        assert np.array_equal(a.seed_indices, b.seed_indices)

    def test_duplicate_rows_fall_back_to_uniform(self):
        # three copies of the same point: all weights hit zero after the
        # first pick, remaining picks fall back to uniform-among-unchosen
        rows = [sv([(0, 2.0)]), sv([(0, 3.0)]), sv([(0, 4.0)])]
        data = Dataset.from_rows(rows, dim=1)
        cs = seeding.init_kmpp(data, 3, alpha=1.0, seed=5)
        assert sorted(cs.seed_indices.tolist()) == [0, 1, 2]


class TestAfkmc2:
    def test_antipodal_forced_pick(self, antipodal):
        for seed in range(20):
            cs = seeding.init_afkmc2(antipodal, 2, alpha=1.0,
                                     chain_length=10, seed=seed)
            assert set(cs.seed_indices.tolist()) == {0, 1}

    def test_chain_length_one_is_valid(self, five_points_data):
        cs = seeding.init_afkmc2(five_points_data, 3, alpha=1.0,
                                 chain_length=1, seed=9)
        assert len(set(cs.seed_indices.tolist())) == 3

    def test_no_duplicates(self, five_points_data):
        for seed in range(100):
            cs = seeding.init_afkmc2(five_points_data, 4, alpha=1.0,
                                     chain_length=5, seed=seed)
            assert len(set(cs.seed_indices.tolist())) == 4

    def test_deterministic(self, small_data):
        a = seeding.init_afkmc2(small_data, 6, alpha=1.0, chain_length=50,
                                seed=31)
        b = seeding.init_afkmc2(small_data, 6, alpha=1.0, chain_length=50,
                                seed=31)
        assert np.array_equal(a.seed_indices, b.seed_indices)


class TestDispatch:
    def test_make_centroids_routes(self, small_data):
        for method in seeding.METHODS:
            cfg = seeding.SeedConfig(method=method, seed=2)
            cs = seeding.make_centroids(small_data, 3, cfg)
            assert cs.k == 3

    def test_make_centroids_validates(self, small_data):
        with pytest.raises(ConfigError):
            seeding.make_centroids(small_data, 3,
                                   seeding.SeedConfig(method="nope"))
