import pytest

from ordercert.orderlogic.signsearch import (
    NonLOWitness,
    OracleError,
    lattice_oracle,
    order_two_oracle,
    sign_search,
    skew_oracle,
    verify_nonlo_witness,
)


def test_order_two_gives_a_witness():
    oracle = order_two_oracle()
    witness = sign_search(oracle, max_depth=2)
    assert witness is not None
    assert set(witness.products) == {(1,), (-1,)}
    # both sign choices square the atom to the identity
    assert witness.products[(1,)] == (0, 0)
    assert witness.products[(-1,)] == (0, 0)
    assert verify_nonlo_witness(witness, oracle)


def test_lattice_never_yields_a_witness():
    oracle = lattice_oracle([(1, 0), (0, 1)])
    assert sign_search(oracle, max_depth=6) is None


def test_translation_subgroup_never_yields_a_witness():
    # a and b generate a free abelian group inside the skew group
    oracle = skew_oracle(["a", "b"])
    assert sign_search(oracle, max_depth=5, max_products=4000) is None


def test_identity_atoms_are_refused():
    oracle = skew_oracle(["a", "a^-1 a"])
    with pytest.raises(OracleError):
        sign_search(oracle, max_depth=2)


def test_tampered_witnesses_are_rejected():
    oracle = order_two_oracle()
    witness = sign_search(oracle, max_depth=2)
    assert witness is not None

    broken = NonLOWitness(1, oracle.name, {(1,): (0, 0), (-1,): (0,)})
    assert not verify_nonlo_witness(broken, oracle)

    missing = NonLOWitness(1, oracle.name, {(1,): (0, 0)})
    assert not verify_nonlo_witness(missing, oracle)

    empty_product = NonLOWitness(1, oracle.name, {(1,): (0, 0), (-1,): ()})
    assert not verify_nonlo_witness(empty_product, oracle)

    out_of_range = NonLOWitness(1, oracle.name, {(1,): (0, 0), (-1,): (3, 3)})
    assert not verify_nonlo_witness(out_of_range, oracle)


def test_witness_round_trip():
    oracle = order_two_oracle()
    witness = sign_search(oracle, max_depth=2)
    data = witness.serialize()
    assert NonLOWitness.deserialize(data) == witness
