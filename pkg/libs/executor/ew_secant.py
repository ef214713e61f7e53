import logging
import signal
import time

from libs.executor.defs import ExecWrapper, TaskDefinition, Response
from libs.cli.verbs import VERBS


class VerbRun(ExecWrapper):
    """
    Running the verb of the task
    """

    def _exec(self, td: TaskDefinition) -> Response:
        # Creating a duplicate instance before processing
        td = td.copy_for_processing()

        if td.verb not in VERBS:
            raise ValueError("unknown verb {}".format(td.verb))
        start = time.process_time()
        resp = VERBS[td.verb](td)
        resp.elapsed_times["total"] = time.process_time() - start
        logging.debug("Executor: %s %s done in %.3fs", td.verb, td.source,
                      resp.elapsed_times["total"])
        return resp

    @staticmethod
    def instantiate(td: TaskDefinition):
        return VerbRun()


class Timeout(ExecWrapper):
    """
    Interrupts the verb with a TimeoutError after params["timeout"] seconds (SIGALRM)
    """

    def __init__(self, seconds: int):
        super().__init__()
        self.seconds = seconds
        self.previous_handler = None

    def _on_alarm(self, signum, frame):
        raise TimeoutError("no result after {}s".format(self.seconds))

    def _before(self, td: TaskDefinition):
        self.previous_handler = signal.signal(signal.SIGALRM, self._on_alarm)
        signal.alarm(self.seconds)

    def _after(self, td: TaskDefinition, resp: Response):
        signal.alarm(0)
        if self.previous_handler is not None:
            signal.signal(signal.SIGALRM, self.previous_handler)

    @staticmethod
    def instantiate(td: TaskDefinition):
        seconds = int(td.params.get('timeout', 0))
        return __class__(seconds) if seconds > 0 else None
