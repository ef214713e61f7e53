import os
OUTPUT_DIR = os.path.dirname(os.path.realpath(__file__))
DEFAULT_REPORTS_OUTPUT_FOLDER = os.path.join(OUTPUT_DIR, "reports")
DEFAULT_LOGS_OUTPUT_FOLDER = os.path.join(OUTPUT_DIR, "logs")
