import os
from typing import Any
from typing import Optional

from orjson import loads as j_loads

from logger import debug

CONFIG_PATH = os.environ.get("UNCOVER_CONFIG", "uncover.json")


class JsonFile:
    """Assists within working with simple JSON files."""

    def __init__(self, file_name: str):
        """Loads a Json file `file_name` from disk, if it exists.

        Args:
            file_name (str): The path including the filename of the JSON file
                you would like to load.
        """

        self.file: Optional[dict] = None
        self.file_name = file_name
        if os.path.exists(file_name):
            self.load_file()

    def load_file(self) -> None:
        """Reloads the file fully into memory."""

        with open(self.file_name, "rb") as f:
            self.file = j_loads(f.read())

    def get_file(self) -> Optional[dict]:
        """Returns the loaded JSON file as a dict."""
        return self.file


class ConfigReader:
    """A parent class meant for the easy management of a configuration `JSON`
    file. Keys missing from the file keep the class default."""

    def __init__(self):
        """Sets placeholder variables."""

        # Keys the file did not provide.
        self.defaulted_keys: list = []

        # An object around the configuration file.
        self.json: JsonFile = JsonFile(CONFIG_PATH)

    def __init_subclass__(cls):
        """Sets and reads the config child class."""

        cls.__init__(cls)

        # Now we read all of the annotated variables.
        for var_name, key_type in cls.__annotations__.items():
            default = getattr(cls, var_name, None)
            key_val = cls.read_json(cls, var_name, default)

            # Force it to be the specified type.
            setattr(cls, var_name, key_type(key_val))

        if cls.defaulted_keys:
            debug("Config keys using defaults: " + ", ".join(cls.defaulted_keys))

    def read_json(self, key: str, default: Any = None) -> Any:
        """Reads a value directly from the json file and returns it, falling
        back to `default` when the key (or the whole file) is absent.

        Args:
            key (str): The JSON key to fetch the value of.
            default (any): The value to use if the key is not set.

        Returns:
            Value of the key.
        """

        file = self.json.get_file()
        if file is None or key not in file:
            self.defaulted_keys.append(key)
            return default

        return file[key]


class Config(ConfigReader):
    """The main class for the storage of config values.
    These values are read directly from the `uncover.json` file."""

    table_limit: int = 16
    memo_budget: int = 2_000_000
    default_seed: int = 0
    stats_workers: int = 1
    debug: bool = False


conf = Config()
