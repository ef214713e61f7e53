import os
DEFAULT_INPUT_FOLDER = os.path.dirname(os.path.realpath(__file__))
DEFAULT_POLYTOPES_INPUT_FOLDER = os.path.join(DEFAULT_INPUT_FOLDER, "polytopes")
DEFAULT_PARAMS_INPUT_FOLDER = os.path.join(DEFAULT_INPUT_FOLDER, "params")
