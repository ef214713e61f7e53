"""
Logging wrappers : a log file per task, a logging level per task
"""
import logging
import os
from typing import Optional

from libs.executor.defs import ExecWrapper, TaskDefinition, Response
from libs.io.logsetup import LOG_FORMAT, LOGGING_LEVELS


class LoggingToFile(ExecWrapper):
    """
    Copies the logs of the task to <task_id>.log in the output dir
    """

    DEFAULT_FILENAME = 'output.log'

    def __init__(self, output_dir: str, filename: str = DEFAULT_FILENAME):
        super().__init__()
        self.output_dir = output_dir
        self.filename = filename
        self.handler: Optional[logging.FileHandler] = None

    def _before(self, td: TaskDefinition):
        os.makedirs(self.output_dir, exist_ok=True)
        root = logging.getLogger('')
        self.handler = logging.FileHandler(os.path.join(self.output_dir, self.filename))
        self.handler.setFormatter(logging.Formatter(LOG_FORMAT))
        self.handler.setLevel(root.level)
        root.addHandler(self.handler)
        logging.info("Logs: writing %s to %s", td.verb, self.handler.baseFilename)

    def _after(self, td: TaskDefinition, resp: Optional[Response]):
        if self.handler is None:
            return
        logging.getLogger('').removeHandler(self.handler)
        self.handler.close()
        self.handler = None
        td.local_context.add_file(self.filename, ftype='logging', title='Logs',
                                  mime='text/plain')

    @staticmethod
    def instantiate(td: TaskDefinition):
        if not td.local_context.output_dir or td.params.get('skip_file_logging', False):
            return None
        filename = "{}.log".format(td.task_id) if td.task_id else __class__.DEFAULT_FILENAME
        return __class__(td.local_context.output_dir, filename)


class LoggingLevel(ExecWrapper):
    """
    Sets the root logging level during the task
    """

    def __init__(self, level: int):
        super().__init__()
        self.level = level
        self.previous_level = logging.NOTSET

    def _before(self, td: TaskDefinition):
        root = logging.getLogger('')
        self.previous_level = root.level
        root.setLevel(self.level)

    def _after(self, td: TaskDefinition, resp: Optional[Response]):
        logging.getLogger('').setLevel(self.previous_level)

    @staticmethod
    def instantiate(td: TaskDefinition):
        level = td.params.get('logging_level')
        if not level:
            return None
        if level not in LOGGING_LEVELS:
            raise ValueError("Logs: unknown logging level {}".format(level))
        return __class__(LOGGING_LEVELS[level])
