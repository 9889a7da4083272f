"""Small shared helpers."""

import os

THREADS_ENV = "FLAMESENTINEL_THREADS"


def worker_count() -> int:
    """Worker-thread cap for parallelizable per-frame work.

    Defaults to the CPU count (capped at 8); the FLAMESENTINEL_THREADS
    environment variable overrides it. Values below 1 are clamped to 1.
    """
    raw = os.environ.get(THREADS_ENV)
    if raw is not None:
        try:
            return max(1, int(raw))
        except ValueError:
            return 1
    return max(1, min(8, os.cpu_count() or 1))
