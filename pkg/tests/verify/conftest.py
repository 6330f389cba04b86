import pytest

from wtoll.verify.corpus import CorpusSpec


@pytest.fixture
def small_spec():
    return CorpusSpec(
        exhaustive_max_order=4,
        random_orders=(6,),
        random_count=3,
        tree_count=4,
        leaf_graph_count=4,
        factor_max_order=4,
        product_pair_count=4,
        interval_instance_count=5,
        generalized_corona_count=2,
        chain_max_order=4,
        hull_axiom_count=10,
    )
