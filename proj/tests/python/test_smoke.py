import json
from fractions import Fraction

import partdist


def test_partitions_of_five():
    assert partdist.partitions(5) == [
        (5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)
    ]
    assert partdist.multiplicity([3, 1, 1]) == (2, 0, 1, 0, 0)
    assert partdist.partition_vector([2, 2, 1]) == (2, 2, 1, 0, 0)


def test_pmf_is_exact():
    pmf = partdist.pmf(3)
    assert pmf == {(3,): Fraction(1, 3), (2, 1): Fraction(1, 2), (1, 1, 1): Fraction(1, 6)}
    assert sum(partdist.pmf(12).values()) == 1
    assert partdist.fine_identity_holds(20)


def test_moments():
    assert partdist.expectation_y(4) == [Fraction(1, k) for k in range(1, 5)]
    assert partdist.covariance_y(3) == [
        [1, 0, Fraction(-1, 3)],
        [0, Fraction(1, 4), Fraction(-1, 6)],
        [Fraction(-1, 3), Fraction(-1, 6), Fraction(2, 9)],
    ]
    assert partdist.verify_mgf_recursion(6, 2)
    assert partdist.mgf(3) == {(3, 0, 0): Fraction(1, 6), (1, 1, 0): Fraction(1, 2), (0, 0, 1): Fraction(1, 3)}


def test_x_sequences_and_fit():
    assert partdist.x1_sequence(10)[-1] == 23759791
    assert partdist.x2_sequence(8) == [1, 4, 21, 131, 950, 7694, 70343]
    assert partdist.conjecture(9, 3) == partdist.scaled_expectation_x(9)[5]
    fit = partdist.fit_binomial_basis(3, [7, 8, 9, 10, 11])
    assert fit["coefficients"] == {2: 1, 3: 2, 4: 9, 5: 20, 6: 15}
    assert fit["holdout_ok"] and fit["claims_ok"]


def test_sampler_is_reproducible():
    a = partdist.sample(5, 20000, seed=11)
    b = partdist.sample(5, 20000, seed=11, workers=3)
    assert a == b
    assert sum(a["counts"].values()) == 20000
    assert a["chi_square_status"] == "ok"


def test_cli_entry_point():
    status, out, err = partdist.run_cli(["cov", "--n", "3", "--format", "json"])
    assert status == 0 and err == ""
    assert json.loads(out)["covariance"][2][2] == "2/9"
    status, out, err = partdist.run_cli(["pmf", "--n", "-1"])
    assert status == 1 and err.count("\n") == 1
