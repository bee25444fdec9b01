import importlib
import string

import pytest

from igv.backend.domain import errors
from igv.backend.ingest.game_reader import GameFileError
from igv.backend.reporting.svg import PlotError
from igv.config import ConfigError
from igv.frontend import messages


def _templates() -> list[tuple[str, str]]:
    found = []
    for section in (messages.PROGRAM, messages.PROGRESS, messages.RESULTS, messages.COMPLETION):
        found.extend(section.items())
    for code, entry in messages.ERRORS.items():
        found.extend((f"{code}.{key}", text) for key, text in entry.items())
    return found


def test_catalog_holds_only_non_empty_strings() -> None:
    for key, text in _templates():
        assert isinstance(text, str), key
        assert text.strip(), key


@pytest.mark.parametrize(
    "error_type",
    [
        errors.InputError,
        errors.ExhaustiveLimitError,
        errors.UnsupportedStructureError,
        errors.NotExtendableError,
        errors.NonUniqueValueError,
        GameFileError,
        ConfigError,
        PlotError,
    ],
)
def test_every_error_code_has_an_entry(error_type: type) -> None:
    assert error_type.default_code in messages.ERRORS


def test_grand_coalition_code_has_an_entry() -> None:
    assert errors.GRAND_COALITION_MISSING in messages.ERRORS


def test_every_error_has_title_and_next_step() -> None:
    for code, entry in messages.ERRORS.items():
        assert set(entry) == {"title", "next_step"}, code
    assert "unexpected" in messages.ERRORS


def test_result_templates_format_with_their_fields() -> None:
    assert messages.RESULTS["oracle"].format(verdict="unique") == "oracle: unique"
    assert messages.COMPLETION["run_id"].format(run_id="r1") == "Run ID: r1"
    summary = messages.RESULTS["audit_summary"].format(checks=9, violated=1, inapplicable=2)
    assert summary == "9 checks, 1 violated, 2 inapplicable"


def test_error_texts_have_no_placeholders() -> None:
    for code, entry in messages.ERRORS.items():
        for text in entry.values():
            fields = [name for _, name, _, _ in string.Formatter().parse(text) if name]
            assert not fields, code


def test_reload_is_silent_and_stable(capsys) -> None:
    before = dict(messages.ERRORS)
    importlib.reload(messages)

    captured = capsys.readouterr()
    assert captured.out == captured.err == ""
    assert messages.ERRORS == before
