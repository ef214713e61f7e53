"""
Definitions shared by the executor : the task, its local context, the response of a verb and
the base class of the execution wrappers.
"""
import copy
from typing import Optional, Dict, Union

# verbs that do not need an input document
VERBS_WITHOUT_INPUT = ('selftest', 'catalog')


class LocalContext:
    """Files produced by a task on the local machine"""

    def __init__(self, output_dir: Optional[str] = None):
        self.output_dir = output_dir
        self.files: Dict[str, Dict] = {}

    def __repr__(self):
        return "LocalContext({}, files={})".format(self.output_dir, sorted(self.files))

    def add_file(self, name: str, ftype: str = '?', title: Optional[str] = None,
                 mime: Optional[str] = None):
        """
        Declares a file written in the output dir
        """
        self.files[name] = {'type': ftype, 'title': title or name, 'mime': mime}


class Response:
    """
    Response of a verb : the report payload, the exit code and the measured times
    """

    def __init__(self, payload: Dict, exit_code: int = 0,
                 elapsed_times: Optional[Dict[str, float]] = None):
        self.payload = payload
        self.exit_code = exit_code
        self.elapsed_times = elapsed_times or {}

    def __repr__(self):
        return "Response(exit_code={}, keys={})".format(self.exit_code, sorted(self.payload))


class TaskDefinition:
    """Definition of the task we're about to process"""

    def __init__(self):
        self.verb: str = None  # analyze, subset, catalog...
        self.source: str = None  # input path or catalog spec, as typed
        self.document: Union[Dict, str] = None  # json input or catalog spec (immutable)
        self.params: Dict = {}  # processing options (immutable)
        self.task_id: str = None  # name of the log and report files
        self.local_context = LocalContext()

    def copy_for_processing(self) -> 'TaskDefinition':
        """
        Copy given to the verb : the document and the params are duplicated, the local context
        is shared.
        :return:
        """
        new = copy.copy(self)
        new.document = copy.deepcopy(self.document)
        new.params = copy.deepcopy(self.params)
        return new

    def check(self):
        """Check the input is correct"""
        if not self.verb:
            raise ValueError('verb is invalid')
        if self.document is None and self.verb not in VERBS_WITHOUT_INPUT:
            raise ValueError('{} needs an input'.format(self.verb))
        if not isinstance(self.params, dict):
            raise ValueError('params is invalid')

    def __str__(self):
        return "Verb: {}, Source: {}, Params: {}".format(self.verb, self.source, self.params)


class ExecWrapper:
    """
    Link of the execution chain. run calls _before, then _exec (by default the next link),
    then _after even when _exec raised.
    """

    def __init__(self):
        self.next: Optional['ExecWrapper'] = None

    def __repr__(self):
        return type(self).__name__

    def run(self, td: TaskDefinition) -> Response:
        """
        Should not be overridden
        :param td:
        :return:
        """
        self._before(td)
        resp: Optional[Response] = None
        try:
            resp = self._exec(td)
            return resp
        finally:
            self._after(td, resp)

    def _before(self, td: TaskDefinition):
        pass

    def _after(self, td: TaskDefinition, resp: Optional[Response]):
        pass

    def _exec(self, td: TaskDefinition) -> Optional[Response]:
        return self.next.run(td) if self.next else None

    @staticmethod
    def instantiate(td: TaskDefinition) -> Optional['ExecWrapper']:
        """
        The wrapper needed by the task, None when the task does not need it
        """
        return None
