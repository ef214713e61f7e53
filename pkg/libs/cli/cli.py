# coding=utf-8
"""
Command line module

Parses the command line, builds the task definition and runs it through the executor.
• the report is printed on stdout, as json or as a table
• errors are printed on stderr and mapped to the exit codes below
• --batch runs a verb on every json file of a directory with a pool of processes
"""
from typing import Optional, Sequence, Tuple, Dict
import argparse
import logging
import multiprocessing
import os
import sys

import config
import libs.io.logsetup as logsetup
import libs.io.reader as reader
import libs.io.writer as writer
import libs.polytope.polytope as polytope
from libs.cli.verbs import VERBS, EXIT_HYPOTHESIS, EXIT_CONSISTENCY
from libs.executor.executor import Executor
from libs.executor.defs import TaskDefinition, Response
from libs.utils.custom_exceptions import (LatticeError, InputFormatError, NotSmoothError,
                                          HypothesisError, ConsistencyError)

EXIT_OK = 0
EXIT_TIMEOUT = 1
EXIT_INPUT = 2
EXIT_NOT_SMOOTH = 3

ERROR_EXIT_CODES = (
    (NotSmoothError, EXIT_NOT_SMOOTH),
    (HypothesisError, EXIT_HYPOTHESIS),
    (ConsistencyError, EXIT_CONSISTENCY),
    (InputFormatError, EXIT_INPUT),
    (LatticeError, EXIT_INPUT),
    (ValueError, EXIT_INPUT),
    (TimeoutError, EXIT_TIMEOUT),
)

FAMILY_FLAGS = ("n", "k", "r", "degrees", "factors")

EXAMPLE_TEXT = """
Example usage:
==============

bin/cli.py analyze resources/polytopes/hexagon.json
bin/cli.py analyze "truncated:n=4,k=1" -f table
bin/cli.py catalog truncated --n 4 --k 1
bin/cli.py subset resources/polytopes/hexagon_outer.json
bin/cli.py analyze --batch resources/polytopes -o /tmp/reports
bin/cli.py selftest
"""


def exit_code_for(error: Exception) -> int:
    """
    The exit code of an error raised while processing a task
    """
    for error_type, code in ERROR_EXIT_CODES:
        if isinstance(error, error_type):
            return code
    raise error


def error_message(error: Exception) -> str:
    """
    The message printed on stderr, it names the failing vertex of a polytope that is not smooth
    """
    if isinstance(error, NotSmoothError) and error.vertex is not None:
        return "{}: {} (vertex {})".format(type(error).__name__, error, list(error.vertex))
    return "{}: {}".format(type(error).__name__, error)


def _exists_path(parser, path, file=None):
    if not os.path.exists(path):
        return parser.error("Path %s does not exist!" % path)

    if file is not None:
        if file and not os.path.isfile(path):
            return parser.error("Not a file: %s" % path)
        if not file and not os.path.isdir(path):
            return parser.error("Not a dir: %s" % path)

    return path


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="secant",
        description="Secant varieties of smooth toric varieties (%s)" % Executor.VERSION,
        epilog=EXAMPLE_TEXT,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("verb", choices=sorted(VERBS), help="the computation to run")
    parser.add_argument("input", nargs="?", default=None,
                        help="a json file, a catalog spec (name:key=value,...) or a family name")
    parser.add_argument("-f", "--format", dest="format", choices=("json", "table"),
                        default="json", help="the report format")
    parser.add_argument("--batch", dest="batch", metavar="DIR",
                        type=lambda x: _exists_path(parser, x, False),
                        help="run the verb on every json file of the directory")
    parser.add_argument("-o", dest="output", required=False, metavar="DIR",
                        help="the output dir of the reports and logs")
    parser.add_argument("--debug-all-vertices", dest="debug_all_vertices",
                        action="store_true", default=None,
                        help="run the classification from every vertex and compare")
    parser.add_argument("--intersection-table", dest="intersection_table", action="store_true",
                        default=None, help="chow : add every top degree boundary monomial")
    parser.add_argument("--n", dest="n", type=int, help="family dimension")
    parser.add_argument("--k", dest="k", type=int, help="family truncation level")
    parser.add_argument("--r", dest="r", type=int, help="family dilation")
    parser.add_argument("--degrees", dest="degrees", type=int, nargs="+",
                        help="scroll degrees")
    parser.add_argument("--factors", dest="factors",
                        type=lambda x: reader.parse_value("factors", x),
                        help="product factors as dxn-dxn, for instance 1x2-1x2")
    parser.add_argument("-p", dest="params", required=False, metavar="FILE",
                        type=lambda x: _exists_path(parser, x, True),
                        help="the input params file path")
    parser.add_argument("-l", "--logging-level", dest="logging_level",
                        choices=sorted(logsetup.LOGGING_LEVELS), help="the logging level")
    parser.add_argument("-t", "--timeout", dest="timeout", type=int,
                        help="timeout in seconds")
    parser.add_argument("--task-id", dest="task_id", help="specify a task ID", required=False)
    return parser


def _params(args: argparse.Namespace, conf: Dict) -> Dict:
    params = reader.read_document(args.params) if args.params else {}
    if args.debug_all_vertices is not None:
        params["debug_all_vertices"] = args.debug_all_vertices
    else:
        params.setdefault("debug_all_vertices",
                          conf.get("classify", {}).get("debug_all_vertices", False))
    if args.intersection_table is not None:
        params["intersection_table"] = args.intersection_table
    if args.logging_level:
        params["logging_level"] = args.logging_level
    if args.timeout:
        params["timeout"] = args.timeout
    family_params = {flag: getattr(args, flag) for flag in FAMILY_FLAGS
                     if getattr(args, flag) is not None}
    if family_params:
        params["family_params"] = family_params
    return params


def create_task(verb: str, source: Optional[str], params: Dict,
                output_dir: Optional[str] = None, task_id: Optional[str] = None
                ) -> TaskDefinition:
    """
    Builds the task definition of a verb
    :param verb:
    :param source: a json file path or a catalog spec
    :param params:
    :param output_dir: the dir of the per task log file
    :param task_id:
    :return:
    """
    td = TaskDefinition()
    td.verb = verb
    td.source = source
    td.task_id = task_id
    td.params = params
    if source is not None:
        td.document = source if verb == "catalog" else reader.load_input(source)
    if output_dir:
        td.local_context.output_dir = output_dir
    td.check()
    return td


def run_task(td: TaskDefinition) -> Tuple[int, Optional[Dict], Optional[str]]:
    """
    Runs a task and catches the library errors
    :return: the exit code, the report payload and the error message
    """
    try:
        response: Response = Executor().run(td)
    except (ValueError, TimeoutError) as error:
        logging.debug("CLI: %s failed on %s", td.verb, td.source, exc_info=True)
        return exit_code_for(error), None, error_message(error)
    return response.exit_code, response.payload, None


def _report_name(source: str) -> str:
    name = os.path.basename(source)
    if name.endswith(".json"):
        name = name[:-len(".json")]
    return name + ".report"


def _batch_file(job: Tuple[str, str, str, Dict]) -> Dict:
    """
    Processes one file of a batch and saves its report
    """
    verb, file_path, output_dir, params = job
    try:
        td = create_task(verb, file_path, dict(params))
    except ValueError as error:
        code, payload, message = exit_code_for(error), None, error_message(error)
    else:
        code, payload, message = run_task(td)
    report = payload if payload is not None else {"error": message, "exit_code": code}
    report_path = writer.save_as_json(report, output_dir, _report_name(file_path))
    logging.info("CLI: %s -> %s (exit %i)", file_path, report_path, code)
    return {"file": os.path.basename(file_path), "exit_code": code,
            "report": os.path.basename(report_path)}


def run_batch(verb: str, folder: str, output_dir: Optional[str], params: Dict,
              processes: int = 1) -> Tuple[int, Dict]:
    """
    Runs a verb on every json file of a folder, the reports are written next to the inputs
    unless an output dir is given
    :return: the highest exit code and the summary ordered by file name
    """
    output_dir = output_dir or folder
    jobs = [(verb, os.path.join(folder, name), output_dir, params)
            for name in reader.get_list_from_folder(folder)]
    logging.info("CLI: batch of %i files with %i processes", len(jobs), processes)

    pool = None
    if processes > 1 and len(jobs) > 1:
        pool = multiprocessing.Pool(min(processes, len(jobs)))
        map_func = pool.map
    else:
        def map_func(f, it):
            """ simple map function"""
            return list(map(f, it))

    try:
        results = map_func(_batch_file, jobs)
    finally:
        if pool:
            pool.close()
            pool.join()

    results = sorted(results, key=lambda result: result["file"])
    exit_code = max((result["exit_code"] for result in results), default=EXIT_OK)
    return exit_code, {"files": results, "exit_code": exit_code}


def run(argv: Sequence[str]) -> int:
    """
    Entry point of the command line
    :param argv: the arguments without the program name
    :return: the exit code
    """
    parser = _parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else EXIT_INPUT

    conf = config.from_file()
    logsetup.init(console_level=conf.get("console", {}).get("options", {}).get("level", "info"))
    polytope.MAX_BOX_POINTS = conf.get("lattice", {}).get("max_box_points",
                                                          polytope.MAX_BOX_POINTS)

    try:
        params = _params(args, conf)
    except InputFormatError as error:
        print(error_message(error), file=sys.stderr)
        return EXIT_INPUT

    if args.batch:
        processes = conf.get("batch", {}).get("processes", 1)
        code, summary = run_batch(args.verb, args.batch, args.output, params, processes)
        print(writer.render(summary, args.format))
        return code

    if args.verb == "catalog" and args.input is None and "family_params" in params:
        parser.print_usage(sys.stderr)
        print("catalog: a family name is needed with family parameters", file=sys.stderr)
        return EXIT_INPUT

    try:
        td = create_task(args.verb, args.input, params, args.output, args.task_id)
    except ValueError as error:
        print(error_message(error), file=sys.stderr)
        return exit_code_for(error)

    logging.info("CLI: running %s", td)
    code, payload, message = run_task(td)
    if payload is None:
        print(message, file=sys.stderr)
        return code

    print(writer.render(payload, args.format))
    if args.output:
        name = td.task_id or (_report_name(args.input) if args.input else args.verb)
        writer.save_as_json(payload, args.output, name)
    return code


if __name__ == '__main__':

    def cli_run():
        """
        Test
        :return:
        """
        run(["analyze", "hexagon"])

    cli_run()
