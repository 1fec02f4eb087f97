import os
import sys

# Allow running the tests without an editable install.
_SRC = os.path.join(os.path.dirname(__file__), "..", "src")
try:
    import shuflat  # noqa: F401
except ImportError:
    sys.path.insert(0, os.path.abspath(_SRC))
