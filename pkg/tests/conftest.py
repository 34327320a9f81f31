import sys
from pathlib import Path

# Allow running the tests from a checkout without installing the package.
_SRC = Path(__file__).resolve().parent.parent / "src"
if str(_SRC) not in sys.path:
    try:
        import linksgould  # noqa: F401
    except ImportError:
        sys.path.insert(0, str(_SRC))
