import pytest

import lemmas


@pytest.mark.parametrize("name", list(lemmas.ALL))
def test_lemma_property(name):
    checked, failures = lemmas.ALL[name]()
    assert checked > 0
    assert failures == []
