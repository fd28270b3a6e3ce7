import pytest

from masip.catalog import bundled_catalog_path, load_catalog
from masip.fixtures import ARCHS, build_inter_corpus, build_intra_corpus


@pytest.fixture(scope="session")
def toy_catalog():
    return load_catalog(bundled_catalog_path("toy"))


@pytest.fixture(scope="session")
def arm_catalog():
    return load_catalog(bundled_catalog_path("arm-thumb"))


@pytest.fixture(scope="session")
def corpora(tmp_path_factory):
    """Config paths of all four bundled corpora, built once per session.

    Keys: (arch, kind) with arch in {arm-thumb, pisa}, kind in {intra, inter}.
    """
    root = tmp_path_factory.mktemp("corpora")
    paths = {}
    for arch in ARCHS:
        paths[(arch, "intra")] = build_intra_corpus(arch, root / arch / "intra")
        paths[(arch, "inter")] = build_inter_corpus(arch, root / arch / "inter")
    return paths
