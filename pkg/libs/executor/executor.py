"""
The Executor runs a task through a chain of execution wrappers. Each wrapper of EXEC_BUILDERS
decides from the task params whether it takes part, the first builder is the innermost link.
"""
import logging
from typing import List, Type

from libs.version import VERSION
from libs.executor.defs import ExecWrapper, TaskDefinition, Response
from libs.executor.ew_secant import VerbRun, Timeout
from libs.executor.ew_logs import LoggingToFile, LoggingLevel


class Executor:
    VERSION = VERSION

    EXEC_BUILDERS: List[Type[ExecWrapper]] = [
        # computation
        VerbRun, Timeout,
        # logging
        LoggingToFile, LoggingLevel,
    ]

    def run(self, td: TaskDefinition) -> Response:
        """
        Runs the task
        :param td:
        :return: the response of the verb
        """
        return self.create_exec_wrappers(td).run(td)

    def create_exec_wrappers(self, td: TaskDefinition) -> ExecWrapper:
        """
        Instantiates and links the wrappers needed by the task
        :param td:
        :return: the outermost wrapper
        """
        wrappers = [w for w in (builder.instantiate(td) for builder in self.EXEC_BUILDERS) if w]
        if not wrappers:
            raise ValueError("Executor: no wrapper for task {}".format(td))
        for inner, outer in zip(wrappers, wrappers[1:]):
            outer.next = inner
        logging.debug("Executor: chain %s", " > ".join(repr(w) for w in reversed(wrappers)))
        return wrappers[-1]
