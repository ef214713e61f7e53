import os
import json

CONF_DIR = os.path.dirname(os.path.realpath(__file__))
DEFAULT_CONF_PATH = os.path.join(CONF_DIR, 'config.default.json')


def from_file():
    env = os.environ.get('SECANT_ENV')

    # Try to load default conf
    default_conf = {}
    if os.path.isfile(DEFAULT_CONF_PATH):
        with open(DEFAULT_CONF_PATH, 'r') as f:
            default_conf = json.load(f)

    # Try to load env conf, the defaults are enough without SECANT_ENV
    env_conf = {}
    if env is not None:
        env_conf_path = os.path.join(CONF_DIR, f'config.{env.lower()}.json')
        if os.path.isfile(env_conf_path):
            with open(env_conf_path, 'r') as f:
                env_conf = json.load(f)

    # merge both
    return {**default_conf, **env_conf}
