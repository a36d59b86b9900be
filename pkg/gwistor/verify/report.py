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

import json
import logging

import colorama
import prettytable

LOG = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'

class CheckResult(object):
    """! @brief Outcome of a single verification check.

    The witness is the printable canonical form of the defect and is present only for failed
    checks. The detail text is shown in the text report only.
    """

    def __init__(self, check_id, anchor, passed, witness=None, detail=None):
        self.id = check_id
        self.anchor = anchor
        self.status = PASS if passed else FAIL
        self.witness = None if passed else (witness if witness is not None else "")
        self.detail = detail

    @property
    def passed(self):
        return self.status == PASS

    def to_dict(self):
        result = {
            'id': self.id,
            'anchor': self.anchor,
            'status': self.status,
            }
        if not self.passed:
            result['witness'] = self.witness
        return result

    def __repr__(self):
        return "<%s: %s %s>" % (self.__class__.__name__, self.id, self.status)

class CheckReport(object):
    """! @brief Ordered results of a verification suite."""

    def __init__(self, suite, results=None):
        self._suite = suite
        self._results = list(results or [])

    @property
    def suite(self):
        return self._suite

    @property
    def results(self):
        return list(self._results)

    def add(self, result):
        self._results.append(result)

    def get(self, check_id):
        for result in self._results:
            if result.id == check_id:
                return result
        return None

    @property
    def pass_count(self):
        return sum(1 for r in self._results if r.passed)

    @property
    def fail_count(self):
        return sum(1 for r in self._results if not r.passed)

    @property
    def passed(self):
        return self.fail_count == 0

    @property
    def exit_code(self):
        return 0 if self.passed else 1

    def to_dict(self):
        return {
            'suite': self._suite,
            'checks': [r.to_dict() for r in self._results],
            'summary': {
                'pass': self.pass_count,
                'fail': self.fail_count,
                },
            }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=4)

    def format_text(self, color=True):
        """! @brief Render the report as a table followed by the summary line."""
        table = prettytable.PrettyTable(["Check", "Status", "Detail", "Anchor"])
        table.align = 'l'
        table.border = True
        table.hrules = prettytable.HEADER
        table.vrules = prettytable.NONE
        for result in self._results:
            detail = result.detail or ""
            if not result.passed:
                detail = "witness: %s" % result.witness if not detail \
                    else "%s; witness: %s" % (detail, result.witness)
            table.add_row([result.id, self._status_text(result, color), detail, result.anchor])
        summary = "suite %s: %d passed, %d failed" % (self._suite, self.pass_count, self.fail_count)
        return "%s\n%s" % (table.get_string(), summary)

    @staticmethod
    def _status_text(result, color):
        text = result.status.upper()
        if not color:
            return text
        fore = colorama.Fore.GREEN if result.passed else colorama.Fore.RED
        return fore + text + colorama.Style.RESET_ALL
