import logging

import pytest
from hypothesis import given, strategies as st

from textfriction.errors import DomainError
from textfriction.preprocess import (
    strip_gutenberg_boilerplate,
    to_ascii,
    to_letter_stream,
    transliterate,
)


def test_to_ascii_punctuation():
    assert to_ascii("“quoted”") == '"quoted"'
    assert to_ascii("it’s") == "it's"
    assert to_ascii("a—b–c") == "a-b-c"
    assert to_ascii("wait…") == "wait..."


def test_to_ascii_diacritics_and_ligatures():
    assert to_ascii("naïve résumé") == "naive resume"
    assert to_ascii("ﬁne") == "fine"  # fi ligature decomposes
    assert to_ascii("中文") == ""  # no ASCII decomposition -> dropped


def test_transliterate_utf8():
    result = transliterate("café".encode("utf-8"))
    assert result.text == "cafe"
    assert result.invalid_bytes == 0


def test_transliterate_invalid_bytes(caplog):
    with caplog.at_level(logging.WARNING):
        result = transliterate(b"ab\xff\xfecd")
    assert result.text == "abcd"
    assert result.invalid_bytes == 2
    assert "invalid" in caplog.text


def test_transliterate_encodings():
    assert transliterate(b"plain", encoding="ascii").text == "plain"
    with pytest.raises(DomainError):
        transliterate(b"x", encoding="latin-1")


def test_letter_stream():
    stream = to_letter_stream("The cat, 42 times!\n")
    assert stream.letters == "thecattimes"
    assert len(stream) == 11
    assert stream.source_len == len("The cat, 42 times!\n")
    assert to_letter_stream("", source_len=7).letters == ""
    assert to_letter_stream("abc", source_len=99).source_len == 99


@given(st.text(max_size=300))
def test_letter_stream_is_lowercase_alpha(text):
    letters = to_letter_stream(to_ascii(text)).letters
    assert all("a" <= ch <= "z" for ch in letters)


BODY = "First line of the work.\nSecond line.\n"
HEADER = "junk header\n*** START OF THE PROJECT GUTENBERG EBOOK X ***\n"
FOOTER = "*** END OF THE PROJECT GUTENBERG EBOOK X ***\nlicense text\n"


def test_strip_boilerplate_both_markers():
    assert strip_gutenberg_boilerplate(HEADER + BODY + FOOTER) == BODY


def test_strip_boilerplate_partial_markers():
    assert strip_gutenberg_boilerplate(HEADER + BODY) == BODY
    assert strip_gutenberg_boilerplate(BODY + FOOTER) == BODY
    assert strip_gutenberg_boilerplate(BODY) == BODY


def test_strip_boilerplate_end_before_start(caplog):
    text = FOOTER + HEADER + BODY
    with caplog.at_level(logging.WARNING):
        assert strip_gutenberg_boilerplate(text) == text
    assert "marker" in caplog.text
