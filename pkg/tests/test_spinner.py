import io

from utils.spinner import Spinner


def test_spinner_is_silent_off_a_tty():
    stream = io.StringIO()
    with Spinner("Running", stream=stream) as spinner:
        spinner.update("Running syntax-roundtrip")
    assert stream.getvalue() == ""
    assert spinner.message == "Running syntax-roundtrip"
    assert spinner.thread is None
