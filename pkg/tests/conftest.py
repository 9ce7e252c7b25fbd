import os
import sys
import tempfile
from pathlib import Path

from hypothesis import HealthCheck, settings

# one cache directory per test session, shared with CLI subprocesses
os.environ.setdefault("GLINDEX_CACHE_DIR", tempfile.mkdtemp(prefix="glindex-cache-"))
sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")
