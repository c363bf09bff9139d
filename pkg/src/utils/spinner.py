"""
Spinner for long-running CLI work such as ``selftest``.
"""

import itertools
import sys
import threading
import time
from typing import Optional, TextIO


class Spinner:
    """A loading spinner drawn on a terminal stream; silent when the stream is not a TTY."""

    def __init__(self, message: str = "Running", stream: Optional[TextIO] = None):
        self.spinner = itertools.cycle(
            ["⠋", "⠙", "⠹", "⠸", "⠼", "⠴", "⠦", "⠧", "⠇", "⠏"]
        )
        self.message = message
        self.stream = stream if stream is not None else sys.stderr
        self.enabled = bool(getattr(self.stream, "isatty", lambda: False)())
        self.running = False
        self.thread = None
        self._lock = threading.Lock()

    def update(self, message: str):
        """Change the text shown next to the spinner."""
        with self._lock:
            self._clear()
            self.message = message

    def _clear(self):
        if self.enabled:
            self.stream.write("\r" + " " * (len(self.message) + 20) + "\r")
            self.stream.flush()

    def _spin(self):
        """Run the spinner animation."""
        while self.running:
            with self._lock:
                self.stream.write(f"\r{next(self.spinner)} {self.message}...")
                self.stream.flush()
            time.sleep(0.1)

    def start(self):
        """Start the spinner."""
        if not self.enabled:
            return
        self.running = True
        self.thread = threading.Thread(target=self._spin, daemon=True)
        self.thread.start()

    def stop(self):
        """Stop the spinner."""
        self.running = False
        if self.thread:
            self.thread.join()
        with self._lock:
            self._clear()

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, *exc):
        self.stop()
        return False
