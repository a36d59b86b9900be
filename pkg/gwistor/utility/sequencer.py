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

import logging
from collections import OrderedDict
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor

LOG = logging.getLogger(__name__)

class CheckSequence(object):
    """! @brief Ordered sequence of named checks.

    Each task has a name and an associated callable. Calling a task yields either a single
    result, a list of results, or a nested CheckSequence whose results are spliced in at that
    position. The CheckSequence class itself is callable, so instances can be nested as tasks
    within other sequences.

    Results are always returned in task order, whether or not tasks run concurrently.

    A CheckSequence can be iterated over. It will return tuples of (task-name, callable).
    """

    def __init__(self, *args):
        """! @brief Constructor.

        Each parameter must be a 2-tuple with the task name first and a callable second. If you
        need to pass parameters to the callable, use a lambda or functools.partial.
        """
        self._validate_tasks(args)
        self._calls = OrderedDict(args)

    def _validate_tasks(self, tasks):
        for i in tasks:
            assert len(i) == 2
            assert type(i[0]) is str
            assert isinstance(i[1], Callable)

    @property
    def sequence(self):
        """! @brief Returns an OrderedDict of the sequence, keyed by task name."""
        return self._calls

    @property
    def count(self):
        """! @brief Returns the number of tasks in the sequence."""
        return len(self._calls)

    @property
    def names(self):
        return list(self._calls.keys())

    def clear(self):
        self._calls = OrderedDict()

    def remove_task(self, name):
        """! @brief Remove a task with the given name.
        @exception KeyError Raised if no task with the specified name exists.
        """
        del self._calls[name]
        return self

    def has_task(self, name):
        return name in self._calls

    def get_task(self, name):
        """! @brief Return the callable for the named task.
        @exception KeyError Raised if no task with the specified name exists.
        """
        return self._calls[name]

    def replace_task(self, name, replacement):
        """! @brief Change the callable associated with a task."""
        assert isinstance(replacement, Callable)
        if name not in self._calls:
            raise KeyError(name)
        self._calls[name] = replacement
        return self

    def append(self, *args):
        """! @brief Append a new task or tasks to the sequence."""
        self._validate_tasks(args)
        self._calls.update(args)
        return self

    def insert_after(self, afterTaskName, *args):
        """! @brief Insert a task or tasks after a named task.

        @exception KeyError Raised if the named task does not exist in the sequence.
        """
        self._validate_tasks(args)

        if not self.has_task(afterTaskName):
            raise KeyError(afterTaskName)

        seq = list(self._calls.items())
        i = [name for name, _ in seq].index(afterTaskName)
        seq[i + 1:i + 1] = list(args)
        self._calls = OrderedDict(seq)
        return self

    def _run_task(self, item):
        name, call = item
        LOG.debug("Running check %s", name)
        result = call()
        if isinstance(result, CheckSequence):
            return result.invoke()
        elif result is None:
            return []
        elif isinstance(result, (list, tuple)):
            return list(result)
        else:
            return [result]

    def invoke(self, jobs=1):
        """! @brief Execute each task and return the flattened list of results in task order.

        @param self
        @param jobs Number of worker threads. Values below 2 run the tasks serially.
        """
        items = list(self._calls.items())
        if jobs is not None and jobs > 1 and len(items) > 1:
            with ThreadPoolExecutor(max_workers=jobs) as executor:
                chunks = list(executor.map(self._run_task, items))
        else:
            chunks = [self._run_task(item) for item in items]
        return [result for chunk in chunks for result in chunk]

    def __call__(self, *args, **kwargs):
        """! @brief Another way to execute the tasks; supports nesting."""
        return self.invoke()

    def __iter__(self):
        return iter(self._calls.items())

    def __repr__(self):
        s = "<%s@%x: " % (self.__class__.__name__, id(self))
        for name, task in self._calls.items():
            s += "\n%s: %s" % (name, task)
        s += ">"
        return s
