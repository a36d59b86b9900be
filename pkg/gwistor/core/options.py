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

from collections import namedtuple

OptionInfo = namedtuple('OptionInfo', 'name type default help')

OPTIONS_INFO = {
    # Common options
    'config_file': OptionInfo('config_file', str, None,
        "Path to custom config file."),
    'debug.traceback': OptionInfo('debug.traceback', bool, True,
        "Print tracebacks for exceptions."),
    'format': OptionInfo('format', str, "text",
        "Report output format, either 'text' or 'json'."),
    'jobs': OptionInfo('jobs', int, 1,
        "Number of worker threads used to run the checks of a suite. Reports are always "
        "assembled in the fixed check order."),
    'k': OptionInfo('k', str, "symbolic",
        "Sectional curvature of the base. Either a rational number such as '1/2' or 'symbolic' "
        "to treat k as a free symbol."),
    'logging': OptionInfo('logging', (str, dict), None,
        "Logging configuration dictionary, or path to YAML file containing logging configuration."),
    'no_config': OptionInfo('no_config', bool, False,
        "Do not use default config file."),
    'project_dir': OptionInfo('project_dir', str, None,
        "Path to the session's project directory. Defaults to the working directory when the "
        "gwistor tool was executed."),
    'suite': OptionInfo('suite', str, "all",
        "Name of the verification suite to run. One of 'structure', 'properties', 'connection', "
        "'torsion', 'flat', 'contact', 'stiefel', or 'all'."),

    # Sampling options
    'random_seed': OptionInfo('random_seed', int, 1729,
        "Seed for the random samples drawn by property checks."),
    'sample_count': OptionInfo('sample_count', int, 100,
        "Number of random monomial pairs or basis triples drawn by sampled checks."),
    'quaternion_samples': OptionInfo('quaternion_samples', int, 50,
        "Number of random rational points used for the quaternion norm check."),

    # Model options
    'contact.m': OptionInfo('contact.m', int, 4,
        "Dimension of the base manifold used by the eta-Einstein analysis, at least 3."),
    'octonion.convention': OptionInfo('octonion.convention', str, "doubling_standard",
        "Cayley-Dickson doubling convention used for the fiber octonions."),
    'stiefel.l': OptionInfo('stiefel.l', int, 5,
        "Matrix size l of the Stiefel model SO(l)/SO(l-2)."),
    'stiefel.max_l': OptionInfo('stiefel.max_l', int, 9,
        "Largest l accepted by the stiefel subcommand."),
    }
