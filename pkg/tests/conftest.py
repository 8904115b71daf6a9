import pytest

from rhetkit.data import default_gloss_lexicon, default_tag_lexicon


@pytest.fixture(scope="session")
def tag_lexicon():
    return default_tag_lexicon()


@pytest.fixture(scope="session")
def gloss_lexicon():
    return default_gloss_lexicon()
