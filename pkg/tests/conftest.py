import sys
from pathlib import Path

import pytest

TESTS_DIR = Path(__file__).parent
sys.path.insert(0, str(TESTS_DIR))

DATA_DIR = Path(__file__).parent.parent / "src" / "chatbim" / "data"
HEXAGON_TRANSCRIPT = DATA_DIR / "transcripts" / "hexagon_replay.json"
HOTEL_SCRIPT = DATA_DIR / "scripts" / "two_story_hotel.ts"
CORPUS_FILE = DATA_DIR / "corpus" / "test_prompts.json"

HEXAGON_INSTRUCTION = (
    "Design a building with a complex polygonal footprint (e.g., hexagonal). Each side of the "
    "hexagon should be 5 meters. Add a slab for the floor and a pitched roof. Include a door on "
    "one side and a window on each of the other sides."
)


@pytest.fixture
def hexagon_transcript_path() -> Path:
    return HEXAGON_TRANSCRIPT


@pytest.fixture
def hotel_script_path() -> Path:
    return HOTEL_SCRIPT


@pytest.fixture
def corpus_path() -> Path:
    return CORPUS_FILE


def build_hexagon_session(check_via_serialization: bool = False):
    """Fresh session wired to the shipped replay transcript."""
    from chatbim.agents.mock import MockChatBackend, MockTranscript
    from chatbim.orchestrator.session import Session

    transcript = MockTranscript.load(HEXAGON_TRANSCRIPT)
    backend = MockChatBackend(transcript)
    session = Session(backend, seed=0, check_via_serialization=check_via_serialization)
    return session, backend
