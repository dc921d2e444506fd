import pytest
from hypothesis import settings

import catalogue

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@pytest.fixture(params=sorted(catalogue.CATALOGUE))
def catalogue_graph(request):
    return catalogue.CATALOGUE[request.param]()
