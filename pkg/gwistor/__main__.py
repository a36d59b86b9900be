#!/usr/bin/env python

# gwistor
# Copyright (c) 2026 The gwistor developers
# SPDX-License-Identifier: Apache-2.0
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import sys
import logging
import argparse
import json
import colorama

from . import __version__
from .core.session import Session
from .core import exceptions
from .core import options
from .utility.cmdline import convert_session_options
from .expr.evaluator import Evaluator
from .verify.suites import (VerificationContext, run_suite, run_stiefel, SUITE_NAMES, ALL_SUITES)

## @brief Default log format for all subcommands.
LOG_FORMAT = "%(relativeCreated)07d:%(levelname)s:%(module)s:%(message)s"

## @brief Logger for this module.
LOG = logging.getLogger("gwistor.tool")

## @brief Default log levels for each of the subcommands.
DEFAULT_CMD_LOG_LEVEL = {
    'verify':       logging.WARNING,
    'eval':         logging.WARNING,
    'stiefel':      logging.INFO,
    'options':      logging.INFO,
    }

## @brief Valid report formats.
FORMATS = [
    'text',
    'json',
    ]

class GwistorTool(object):
    """! @brief Main class for the gwistor tool and subcommands.
    """
    def __init__(self):
        self._args = None
        self._default_log_level = logging.INFO
        self._log_level_delta = 0
        self._parser = None
        self._session = None

    def build_parser(self):
        """! @brief Construct the command line parser with all subcommands and options."""
        parser = argparse.ArgumentParser(
            description='Exact symbolic verification of the G2 structure on the gwistor space')
        subparsers = parser.add_subparsers(title="subcommands", metavar="", dest='cmd')

        parser.add_argument('-V', '--version', action='version', version=__version__)
        parser.add_argument('--help-options', action='store_true',
            help="Display available user options.")

        # Define logging related options.
        loggingOptions = argparse.ArgumentParser(description='logging', add_help=False)
        loggingOptions.add_argument('-v', '--verbose', action='count', default=0,
            help="More logging. Can be specified multiple times.")
        loggingOptions.add_argument('-q', '--quiet', action='count', default=0,
            help="Less logging. Can be specified multiple times.")

        # Define common options for all subcommands, excluding --verbose and --quiet.
        commonOptionsNoLoggingParser = argparse.ArgumentParser(description='common', add_help=False)
        commonOptionsNoLogging = commonOptionsNoLoggingParser.add_argument_group("configuration")
        commonOptionsNoLogging.add_argument('-j', '--dir', metavar="PATH", dest="project_dir",
            help="Set the project directory. Defaults to the directory where gwistor was run.")
        commonOptionsNoLogging.add_argument('--config', metavar="PATH",
            help="Specify YAML configuration file. Default is gwistor.yaml or gwistor.yml.")
        commonOptionsNoLogging.add_argument("--no-config", action="store_true", default=None,
            help="Do not use a configuration file.")
        commonOptionsNoLogging.add_argument('-O', action='append', dest='options', metavar="OPTION=VALUE",
            help="Set named option.")

        # Define common options for all subcommands with --verbose and --quiet.
        commonOptions = argparse.ArgumentParser(description='common',
            parents=[loggingOptions, commonOptionsNoLoggingParser], add_help=False)

        # Output format option shared by the reporting subcommands.
        formatParser = argparse.ArgumentParser(description='format', add_help=False)
        formatOptions = formatParser.add_argument_group("output")
        formatOptions.add_argument('--format', choices=FORMATS, default=None,
            help="Report format. Default is text.")

        # Create *verify* subcommand parser.
        verifyParser = subparsers.add_parser('verify', parents=[commonOptions, formatParser],
            help="Run verification suites.")
        verifyOptions = verifyParser.add_argument_group("verify options")
        verifyOptions.add_argument('--k', metavar="P/Q|symbolic", default=None,
            help="Sectional curvature of the base. Default is symbolic.")
        verifyOptions.add_argument('--suite', metavar="NAME", default=None,
            help="Suite to run: %s or %s. Default is all." % (", ".join(SUITE_NAMES), ALL_SUITES))
        verifyOptions.add_argument('--jobs', type=int, default=None, metavar="N",
            help="Number of worker threads used to run checks.")
        verifyOptions.add_argument('--no-color', action='store_true',
            help="Do not color the status column.")

        # Create *eval* subcommand parser.
        evalParser = subparsers.add_parser('eval', parents=[commonOptions, formatParser],
            help="Evaluate a form expression.")
        evalParser.add_argument('expression', metavar="EXPR",
            help="Expression over the named forms, e.g. \"d(mu) - (e4^e1 + e5^e2 + e6^e3)\".")
        evalParser.add_argument('--k', metavar="P/Q|symbolic", default=None,
            help="Sectional curvature of the base. Default is symbolic.")

        # Create *stiefel* subcommand parser.
        stiefelParser = subparsers.add_parser('stiefel', parents=[commonOptions, formatParser],
            help="Check the homogeneous model SO(l)/SO(l-2).")
        stiefelParser.add_argument('--l', type=int, default=None, dest='l', metavar="INT",
            help="Matrix size l. Default is 5.")
        stiefelParser.add_argument('--no-color', action='store_true',
            help="Do not color the status column.")

        # Create *options* subcommand parser.
        subparsers.add_parser('options', parents=[loggingOptions],
            help="List available user options.")

        self._parser = parser
        return parser

    def _setup_logging(self):
        """! @brief Configure the logging module.

        The quiet and verbose argument counts are used to set the log verbosity level.
        """
        self._log_level_delta = (self._args.quiet * 10) - (self._args.verbose * 10)
        level = max(1, self._default_log_level + self._log_level_delta)
        logging.basicConfig(level=level, format=LOG_FORMAT)

    def _create_session(self, **kwargs):
        """! @brief Create the session, giving command line values priority over config files."""
        self._session = Session(convert_session_options(self._args.options),
                            project_dir=self._args.project_dir,
                            config_file=self._args.config,
                            no_config=self._args.no_config,
                            **kwargs
                            )
        return self._session

    def _tracebacks(self):
        session = self._session if self._session is not None else Session.get_current()
        return session.log_tracebacks

    def run(self, args=None):
        """! @brief Main entry point for command line processing.

        @return Exit status: 0 when every check passes, 1 for check failures or errors, and 2 for
            usage errors.
        """
        try:
            self._args = self.build_parser().parse_args(args)

            # Running without a subcommand will print usage.
            if self._args.cmd is None:
                if self._args.help_options:
                    self.show_options_help()
                    return 0
                self._parser.print_help()
                return 2

            # The default log level differs for some subcommands.
            self._default_log_level = DEFAULT_CMD_LOG_LEVEL[self._args.cmd]
            self._setup_logging()

            # Invoke subcommand.
            return self._COMMANDS[self._args.cmd](self)
        except KeyboardInterrupt:
            return 0
        except exceptions.UsageError as e:
            LOG.error(e)
            return 2
        except (exceptions.Error, ValueError) as e:
            LOG.critical(e, exc_info=self._tracebacks())
            return 1
        except Exception as e:
            LOG.critical("uncaught exception: %s", e, exc_info=self._tracebacks())
            return 1

    def show_options_help(self):
        """! @brief Display help for user options."""
        for infoName in sorted(options.OPTIONS_INFO.keys()):
            info = options.OPTIONS_INFO[infoName]
            if isinstance(info.type, tuple):
                typename = ", ".join(t.__name__ for t in info.type)
            else:
                typename = info.type.__name__
            print((colorama.Fore.BLUE + "{name}"
                + colorama.Style.RESET_ALL + colorama.Fore.GREEN + " ({typename})"
                + colorama.Style.RESET_ALL + " {help}").format(
                name=info.name, typename=typename, help=info.help))

    def _output_format(self):
        fmt = self._session.options.get('format')
        if fmt not in FORMATS:
            raise exceptions.UsageError("invalid format '%s' (choose from %s)" % (fmt, ", ".join(FORMATS)))
        return fmt

    def _print_report(self, report):
        if self._output_format() == 'json':
            print(report.to_json())
        else:
            color = not self._args.no_color and sys.stdout.isatty()
            print(report.format_text(color=color))
        return report.exit_code

    def do_verify(self):
        """! @brief Handle 'verify' subcommand."""
        session = self._create_session(k=self._args.k, suite=self._args.suite,
            format=self._args.format, jobs=self._args.jobs)
        context = VerificationContext.from_session(session)
        report = run_suite(session.options.get('suite'), context, jobs=session.options.get('jobs'))
        return self._print_report(report)

    def do_eval(self):
        """! @brief Handle 'eval' subcommand."""
        session = self._create_session(k=self._args.k, format=self._args.format)
        result = Evaluator(session.k).evaluate(self._args.expression)
        if self._output_format() == 'json':
            print(json.dumps({
                'expression': result.expression,
                'grade': result.grade,
                'k': str(session.k),
                'value': str(result.value),
                }, indent=4))
        else:
            print("%s = %s" % (result.expression, result.value))
            print("grade %s" % result.grade)
        return 0

    def do_stiefel(self):
        """! @brief Handle 'stiefel' subcommand."""
        session = self._create_session(stiefel__l=self._args.l, format=self._args.format)
        context = VerificationContext.from_session(session)
        report = run_stiefel(session.options.get('stiefel.l'), context,
            max_l=session.options.get('stiefel.max_l'), jobs=session.options.get('jobs'))
        return self._print_report(report)

    def do_options(self):
        """! @brief Handle 'options' subcommand."""
        self.show_options_help()
        return 0

    ## @brief Table of handler methods for subcommands.
    _COMMANDS = {
        'verify':       do_verify,
        'eval':         do_eval,
        'stiefel':      do_stiefel,
        'options':      do_options,
        }

def main():
    sys.exit(GwistorTool().run())

if __name__ == '__main__':
    main()
