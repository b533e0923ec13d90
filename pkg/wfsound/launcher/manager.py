"""
Bodies of the launcher's commands.

Check commands return a document: the verdict's dict with the timing added
to its stats. report() prints a document and gives the exit code.
"""

import json
import platform
import sys
import time

from wfsound.settings import SETTINGS, Settings
from wfsound.common.utils.defines import Holds, Reason
from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.common.utils.utils import class_from_path
from wfsound.utils.logger import logger
from wfsound.net.readers import read_net_file
from wfsound.net.writers import serialize_net, write_net_file
from wfsound.explore.reach_graph import build_reach_graph, export_edge_list
from wfsound.ilp.builders import build_ilp_n, build_ilp_s
from wfsound.sound.verdict import Verdict, Certificate
from wfsound.sound.classical import check_classical, check_k_sound
from wfsound.sound.generalised import check_generalised
from wfsound.sound.structural import check_structural
from wfsound.sound.sound_numbers import compute_sound_numbers
from wfsound.sound.oracle import oracle_k_sound
from wfsound.launcher import configs, utils


WORKFLOW_ERRORS = (ERR.produces_into_initial, ERR.consumes_from_final, ERR.not_on_path, ERR.invalid_argument)


def print_about():
    """
    Print about info.
    """
    print(configs.ABOUT_INFO)


def print_help():
    print(configs.CMDLINE_HELP)


def show_version():
    """
    Show the version.
    """
    print(configs.VERSION_INFO.format(version=utils.wfsound_version(),
                                      os=platform.platform(),
                                      python=sys.version.split()[0]))


def apply_settings(path):
    """
    Apply a Settings subclass given by its dotted path.
    """
    try:
        cls = class_from_path(path, Settings)
        settings = cls()
    except (ImportError, AttributeError, ValueError, TypeError) as e:
        raise WfsoundError(ERR.invalid_argument, configs.ERROR_SETTINGS.format(path=path, error=e))
    SETTINGS.update(settings)
    logger.set_level(SETTINGS.LOG_LEVEL)
    logger.log_info("Settings %s applied." % path)


def read_document(filename):
    try:
        return read_net_file(filename)
    except (IOError, UnicodeDecodeError) as e:
        raise WfsoundError(ERR.invalid_argument, "Can not read %s: %s" % (filename, e), data={"file": filename})


def load_workflow(filename):
    """
    Parse a net file and validate its workflow net.
    """
    return read_document(filename).to_workflow()


def property_label(verdict):
    if verdict.property == "k-sound" and "k" in verdict.parameters:
        return "%s-sound" % verdict.parameters["k"]
    return verdict.property


def verdict_document(verdict, started, extra=None):
    """
    The verdict as a document, with the elapsed time since started.
    """
    document = verdict.to_dict()
    document["property"] = property_label(verdict)
    document["stats"]["timeMs"] = round((time.perf_counter() - started) * 1000, 3)
    if extra:
        document.update(extra)
    return document


def validate(filename):
    """
    Check the workflow net conditions of a file.
    """
    started = time.perf_counter()
    document = read_document(filename)
    net = document.net
    parameters = {"places": len(net.places), "transitions": len(net.transitions)}
    try:
        document.to_workflow()
    except WfsoundError as e:
        if e.code not in WORKFLOW_ERRORS:
            raise
        certificate = Certificate(Reason.NOT_WORKFLOW, message=str(e), element=e.data)
        verdict = Verdict("workflow-net", Holds.FALSE, certificate, parameters=parameters)
    else:
        verdict = Verdict("workflow-net", Holds.TRUE, parameters=parameters)
    return verdict_document(verdict, started)


def check_net(command, wf, args, caps):
    """
    Run one decision procedure.

    Args:
        command: (str) the launcher command.
        wf: (WorkflowNet) the net.
        args: (Namespace) the command's options.
        caps: (ExploreCaps) exploration limits.

    Returns:
        dict: the document.
    """
    started = time.perf_counter()
    logger.log_info("Running %s." % command)

    if command == "classical":
        verdict = check_classical(wf, caps)
    elif command == "ksound":
        verdict = check_k_sound(wf, args.k, caps)
    elif command == "generalised":
        verdict = check_generalised(wf, args.k_max, args.constant, caps)
    elif command == "structural":
        verdict = check_structural(wf, args.k_max, args.constant, caps)
    elif command == "oracle":
        verdict = oracle_k_sound(wf, args.k, caps)
    elif command == "sound-numbers":
        numbers = compute_sound_numbers(wf, args.k_max, args.constant, caps)
        if numbers.p > 0:
            verdict = Verdict("sound-numbers", Holds.TRUE, complete=numbers.complete)
        elif numbers.complete:
            verdict = Verdict("sound-numbers", Holds.FALSE, Certificate(Reason.NO_SOUND_NUMBER))
        else:
            verdict = Verdict("sound-numbers", Holds.UNKNOWN, Certificate(Reason.CAP_HIT))
        verdict.parameters = {"K_max": args.k_max or SETTINGS.K_MAX, "caps": caps.to_dict()}
        return verdict_document(verdict, started, numbers.to_dict())
    else:
        raise WfsoundError(ERR.invalid_argument, configs.ERROR_COMMAND.format(command=command))

    logger.log_result(property_label(verdict), verdict.holds.value, verdict.complete,
                      verdict.stats.get("verticesExplored"))
    return verdict_document(verdict, started)


def _format_value(value):
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return "{%s}" % ", ".join("%s:%s" % item for item in value.items())
    if isinstance(value, list) and all(isinstance(item, str) for item in value):
        return " ".join(value) if value else "(empty)"
    return json.dumps(value)


def report(document, as_json=False):
    """
    Print a document.

    Returns:
        int: the exit code of its holds value.
    """
    if as_json:
        print(json.dumps(document, indent=2))
    else:
        print("%s: %s" % (document["property"], document["holds"]))
        certificate = document.get("certificate")
        if certificate:
            for key, value in certificate.items():
                print("  %s: %s" % (key, _format_value(value)))
        if not document["complete"] and document["holds"] != Holds.UNKNOWN.value:
            print("  complete: false")
    return configs.HOLDS_EXIT_CODES[Holds(document["holds"])]


def export_graph(wf, k, caps):
    """
    Print the reachability graph of i^k as an edge list.

    Returns:
        int: EXIT_UNKNOWN when a cap cut the graph.
    """
    graph = build_reach_graph(wf.net, wf.initial_marking(k), caps)
    sys.stdout.write(export_edge_list(graph))
    if graph.complete:
        return configs.EXIT_HOLDS
    return configs.EXIT_UNKNOWN


def export_ilp(wf, which):
    """
    Print the matrix of ILP_N (which = "n") or ILP^s (which = "s").
    """
    if which == "n":
        program = build_ilp_n(wf)
    else:
        program = build_ilp_s(wf)
    sys.stdout.write(program.export_matrix())
    return configs.EXIT_HOLDS


def generate(generator, args, output=None):
    """
    Build a net with a generator and write it with its parameters as a
    header comment.
    """
    wf, parameters = generator.build(args)
    header = json.dumps(parameters, sort_keys=True)
    if output:
        write_net_file(output, wf, header=header)
        logger.log_info("Net written to %s." % output)
    else:
        sys.stdout.write(serialize_net(wf, header=header))
    return configs.EXIT_HOLDS
