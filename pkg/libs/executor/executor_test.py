import logging
import os
import time

import pytest

from libs.executor.defs import TaskDefinition, Response
from libs.executor.executor import Executor
from libs.executor.ew_secant import Timeout, VerbRun
from libs.executor.ew_logs import LoggingToFile, LoggingLevel
from libs.executor.ew_tests import ExecTest
from libs.version import read_version


def _task(verb: str = "analyze", document="hexagon", **params) -> TaskDefinition:
    td = TaskDefinition()
    td.verb = verb
    td.source = document
    td.document = document
    td.params = params
    return td


def test_exec_wrapper_timeout():
    timeout = Timeout(2)
    timeout.next = ExecTest()
    out = timeout.run(TaskDefinition())
    assert out is not None


def test_timeout_reached():
    class SlowExec(ExecTest):
        def _exec(self, td: TaskDefinition) -> Response:
            time.sleep(3)
            return self.response

    timeout = Timeout(1)
    timeout.next = SlowExec()
    with pytest.raises(TimeoutError):
        timeout.run(TaskDefinition())


def test_instantiate_only_with_params():
    assert Timeout.instantiate(_task()) is None
    assert isinstance(Timeout.instantiate(_task(timeout=2)), Timeout)
    assert LoggingLevel.instantiate(_task()) is None
    assert isinstance(LoggingLevel.instantiate(_task(logging_level="debug")), LoggingLevel)
    assert LoggingToFile.instantiate(_task()) is None


def test_logging_level_restored():
    logger = logging.getLogger('')
    previous = logger.level
    wrapper = LoggingLevel(logging.ERROR)
    wrapper.next = ExecTest()
    wrapper.run(TaskDefinition())
    assert logger.level == previous


def test_logging_to_file(tmp_path):
    td = _task()
    td.task_id = "hexagon-run"
    td.local_context.output_dir = str(tmp_path)
    wrapper = LoggingToFile.instantiate(td)
    wrapper.next = ExecTest()
    wrapper.run(td)
    assert os.path.isfile(str(tmp_path / "hexagon-run.log"))
    assert "hexagon-run.log" in td.local_context.files


def test_verb_run_does_not_modify_task():
    td = _task("catalog", "truncated", family_params={"n": 4, "k": 1})
    resp = VerbRun().run(td)
    assert resp.payload["schema"] == 1
    assert len(resp.payload["vertices"]) == 9
    assert td.params == {"family_params": {"n": 4, "k": 1}}
    assert td.document == "truncated"
    assert "total" in resp.elapsed_times


def test_unknown_verb():
    with pytest.raises(ValueError):
        VerbRun().run(_task("plot"))


def test_executor():
    resp = Executor().run(_task(timeout=30, logging_level="info"))
    assert resp.exit_code == 0
    assert resp.payload["deg_sec"] == 3
    assert resp.payload["rhs"] == 6


def test_check():
    td = TaskDefinition()
    with pytest.raises(ValueError):
        td.check()
    td.verb = "analyze"
    with pytest.raises(ValueError):
        td.check()
    td.verb = "selftest"
    td.check()


def test_copy_for_processing():
    td = _task(family_params={"n": 3})
    td.local_context.output_dir = "/tmp/reports"
    new = td.copy_for_processing()
    new.params["family_params"]["n"] = 4
    assert td.params == {"family_params": {"n": 3}}
    assert new.local_context is td.local_context
    assert str(td) == "Verb: analyze, Source: hexagon, Params: {'family_params': {'n': 3}}"


def test_version(tmp_path):
    assert Executor.VERSION == read_version()
    assert read_version(str(tmp_path)) == "0.0.0"
    (tmp_path / "package.json").write_text('{"version": "1.2.3"}')
    assert read_version(str(tmp_path)) == "1.2.3"


def test_chain_order():
    td = _task(timeout=5, logging_level="debug")
    outer = Executor().create_exec_wrappers(td)
    assert isinstance(outer, LoggingLevel)
    assert isinstance(outer.next, Timeout)
    assert isinstance(outer.next.next, VerbRun)
    assert outer.next.next.next is None


def test_unknown_logging_level():
    with pytest.raises(ValueError):
        LoggingLevel.instantiate(_task(logging_level="verbose"))
