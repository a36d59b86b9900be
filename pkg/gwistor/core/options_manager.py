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

from .options import OPTIONS_INFO

LOG = logging.getLogger(__name__)

class OptionsManager(object):
    """! @brief Option layers of a session, searched from highest to lowest priority.

    OPTIONS_INFO supplies the value of any option no layer sets.
    """

    def __init__(self):
        self._layers = []

    @staticmethod
    def _normalize(options):
        """! @brief Drop None values and map '__' in names to '.'."""
        return {name.replace("__", "."): value for name, value in options.items()
            if value is not None}

    def add_front(self, options, source="keyword arguments"):
        """! @brief Add a layer that takes priority over every existing one."""
        if options:
            layer = self._normalize(options)
            self._layers.insert(0, layer)
            LOG.debug("Options from %s: %s", source, layer)

    def add_back(self, options, source="defaults"):
        """! @brief Add a layer that every existing one takes priority over."""
        if options:
            layer = self._normalize(options)
            self._layers.append(layer)
            LOG.debug("Options from %s: %s", source, layer)

    def get(self, key):
        for layer in self._layers:
            if key in layer:
                return layer[key]
        info = OPTIONS_INFO.get(key)
        return info.default if info is not None else None
