"""
Loading and resetting of the package settings.
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import json
import logging
import os
import sys
import typing
from pathlib import Path

from colorama import Fore

from tgx import TgxException, __version__

logger = logging.getLogger(__name__)

USER_ASSETS_PATH = Path(
    os.environ.get("TGX_HOME", str(Path.home() / ".tgx"))).expanduser()
DEFAULT_PATH = USER_ASSETS_PATH / "settings.json"
GLOBAL_LOGFILE_PATH = USER_ASSETS_PATH / "tgx.log"
VERSION_FILE_NAME = "assets_version"


class SettingsException(TgxException):
    pass


class SettingsContainer(dict):
    """
    dict with attribute access; a locked container rejects new keys
    """
    def __init__(self, data: typing.Mapping[str, typing.Any],
                 lock: bool = True):
        super(SettingsContainer, self).__init__(data)
        dict.__setitem__(self, "__locked__", lock)

    @classmethod
    def from_json_file(cls, settings_path: Path) -> 'SettingsContainer':
        try:
            data = json.loads(Path(settings_path).read_text())
        except json.JSONDecodeError as e:
            raise SettingsException(
                "corrupt settings file {} ({}) - run 'tgx config reset'".
                format(settings_path, e))
        if not isinstance(data, dict):
            raise SettingsException(
                "settings file {} must hold a JSON object".format(
                    settings_path))
        return cls(data)

    def locked(self) -> bool:
        return bool(self.get("__locked__", False))

    def __getattr__(self, attr: str) -> typing.Any:
        if attr not in self:
            raise SettingsException("unknown settings parameter: " + attr)
        return self[attr]

    def __setattr__(self, attr: str, value: typing.Any) -> None:
        if self.locked() and attr not in self:
            raise SettingsException(
                "write-access locked, can't add new parameter {}".format(attr))
        self[attr] = value

    def update_existing_keys(self, other: typing.Mapping[str,
                                                         typing.Any]) -> None:
        self.update((key, other[key]) for key in self.keys() & other.keys())


def _defaults() -> typing.Dict[str, typing.Any]:
    from tgx.tools.settings_template import DEFAULT_SETTINGS_DICT
    return dict(DEFAULT_SETTINGS_DICT)


def write_to_json_file(json_path: Path, dictionary: dict) -> None:
    Path(json_path).write_text(json.dumps(dictionary, indent=4,
                                          sort_keys=True))


def reset(destination: Path = DEFAULT_PATH,
          parameter_subset: typing.Optional[typing.Sequence[str]] = None
          ) -> None:
    """
    Writes the defaults to destination, or only the given parameters of an
    existing file. Unknown parameter names are skipped.
    """
    defaults = _defaults()
    if parameter_subset is None or not Path(destination).exists():
        write_to_json_file(destination, defaults)
        return
    current = json.loads(Path(destination).read_text())
    current.update({
        key: defaults[key]
        for key in parameter_subset if key in defaults
    })
    write_to_json_file(destination, current)


def upgrade(destination: Path = DEFAULT_PATH) -> typing.List[str]:
    """
    Adds parameters that are missing in an existing settings file,
    keeping all values already set.
    :return: names of the added parameters
    """
    current = json.loads(Path(destination).read_text())
    added = sorted(key for key in _defaults().keys() - current.keys())
    if added:
        current.update({key: _defaults()[key] for key in added})
        write_to_json_file(destination, current)
    return added


def _fall_back_on_wrong_types(container: SettingsContainer) -> None:
    for key, default in _defaults().items():
        if key in container and type(container[key]) is not type(default):
            logger.warning(
                "Settings parameter %s=%r has the wrong type, using the "
                "default %r.", key, container[key], default)
            container[key] = default


def load(destination: Path = DEFAULT_PATH) -> SettingsContainer:
    """
    Creates the settings file on first use (or if it was deleted), upgrades
    it when the package version changed and loads it.
    """
    destination = Path(destination)
    destination.parent.mkdir(parents=True, exist_ok=True)
    if not destination.exists():
        try:
            reset(destination)
        except OSError:
            logger.error("Fatal: failed to write package settings file %s",
                         destination)
            raise
        print("{}Initialized new {}{}".format(Fore.LIGHTYELLOW_EX,
                                              destination, Fore.RESET),
              file=sys.stderr)
    version_path = destination.parent / VERSION_FILE_NAME
    if not version_path.exists() or version_path.read_text() != __version__:
        if upgrade(destination):
            print("{}Updated outdated {}{}".format(Fore.LIGHTYELLOW_EX,
                                                   destination, Fore.RESET),
                  file=sys.stderr)
        version_path.write_text(__version__)
    container = SettingsContainer.from_json_file(destination)
    _fall_back_on_wrong_types(container)
    return container


SETTINGS = load()
