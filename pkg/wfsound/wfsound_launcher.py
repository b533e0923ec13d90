#!/usr/bin/env python
"""
WFSOUND LAUNCHER SCRIPT

This is the start point for running wfsound from the command line.
"""

import sys
import traceback

from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.launcher import configs
from wfsound.launcher.utils import CommandParser, print_error


CHECK_COMMANDS = ("classical", "ksound", "generalised", "structural", "sound-numbers", "oracle")


def _global_parser():
    parser = CommandParser(prog="wfsound", add_help=False, allow_abbrev=False)
    parser.add_argument("--json", action="store_true", dest="as_json", default=False)
    parser.add_argument("--node-cap", type=int, dest="node_cap", default=None)
    parser.add_argument("--settings", dest="settings", default=None)
    parser.add_argument("-v", "--version", action="store_true", dest="show_version", default=False)
    parser.add_argument("-h", "--help", action="store_true", dest="show_help", default=False)
    return parser


def _command_parser(command):
    """
    The parser of a command's own options.
    """
    parser = CommandParser(prog="wfsound %s" % command)
    if command in ("ksound", "oracle"):
        parser.add_argument("--k", type=int, required=True)
    elif command in ("generalised", "structural", "sound-numbers"):
        parser.add_argument("--k-max", type=int, dest="k_max", default=None)
        parser.add_argument("--constant", type=int, default=None)
    elif command == "graph":
        parser.add_argument("--k", type=int, default=1)
    elif command == "ilp":
        parser.add_argument("which", choices=("n", "s"))
    parser.add_argument("file")
    return parser


def _generator_help():
    from wfsound.mappings.generator_set import GENERATOR_SET
    lines = ["usage: wfsound gen GENERATOR [options] [-o FILE]", "", "generators:"]
    for key in GENERATOR_SET.all():
        lines.append("  %-12s %s" % (key, GENERATOR_SET.get(key).name))
    return "\n".join(lines)


def run_command(command, argv, options):
    """
    Run one command.

    Args:
        command: (str) the command.
        argv: (list) the command's arguments.
        options: (Namespace) the global options.

    Returns:
        int: the exit code.
    """
    from wfsound.launcher import manager
    from wfsound.explore.reach_graph import ExploreCaps

    if command == "gen":
        from wfsound.mappings.generator_set import GENERATOR_SET
        if not argv or argv[0] in ("-h", "--help"):
            print(_generator_help())
            return configs.EXIT_HOLDS
        generator = GENERATOR_SET.get(argv[0])
        if generator is None:
            print_error(configs.ERROR_GENERATOR.format(key=argv[0], keys=", ".join(GENERATOR_SET.all())))
            return configs.EXIT_USAGE
        parser = CommandParser(prog="wfsound gen %s" % generator.key, description=generator.name)
        parser.add_argument("-o", "--output", default=None)
        generator.add_arguments(parser)
        args = parser.parse_args(argv[1:])
        return manager.generate(generator, args, args.output)

    if command not in CHECK_COMMANDS + ("validate", "graph", "ilp"):
        print_error(configs.ERROR_COMMAND.format(command=command))
        return configs.EXIT_USAGE

    args = _command_parser(command).parse_args(argv)
    if command == "validate":
        return manager.report(manager.validate(args.file), options.as_json)

    caps = ExploreCaps(options.node_cap)
    wf = manager.load_workflow(args.file)
    if command == "graph":
        return manager.export_graph(wf, args.k, caps)
    if command == "ilp":
        return manager.export_ilp(wf, args.which)
    return manager.report(manager.check_net(command, wf, args, caps), options.as_json)


def main(argv=None):
    """
    Run the wfsound main program.

    Args:
        argv: (list) the arguments, sys.argv[1:] if omitted.

    Returns:
        int: the exit code.
    """
    if argv is None:
        argv = sys.argv[1:]

    try:
        options, rest = _global_parser().parse_known_args(argv)
    except WfsoundError as e:
        print_error(str(e))
        return configs.EXIT_USAGE

    if options.show_version:
        from wfsound.launcher import manager
        manager.show_version()
        return configs.EXIT_HOLDS

    if not rest:
        from wfsound.launcher import manager
        if options.show_help:
            manager.print_help()
        else:
            manager.print_about()
        return configs.EXIT_HOLDS

    command = rest[0]
    command_argv = rest[1:]
    if options.show_help:
        # the command's parser prints its own help
        command_argv = command_argv + ["-h"]

    try:
        if options.node_cap is not None and options.node_cap < 1:
            raise WfsoundError(ERR.invalid_argument, "--node-cap must be at least 1.")
        if options.settings:
            from wfsound.launcher import manager
            manager.apply_settings(options.settings)
        return run_command(command, command_argv, options)
    except WfsoundError as e:
        from wfsound.utils.logger import logger
        logger.log_err(e.describe())
        print_error(str(e))
        return configs.EXIT_USAGE
    except SystemExit as e:
        # --help of a command
        return e.code or configs.EXIT_HOLDS
    except Exception as e:
        from wfsound.utils.logger import logger
        logger.log_trace()
        traceback.print_exc()
        print_error(configs.ERROR_INPUT.format(args=" ".join(argv), error=e))
        return configs.EXIT_INTERNAL


if __name__ == '__main__':
    # start wfsound from the command line
    sys.exit(main())
