"""
Version of the toolkit : version.txt at the repository root, else the version of package.json
"""
import json
import os

ROOT_DIR = os.path.realpath(os.path.join(os.path.dirname(os.path.realpath(__file__)), os.pardir))


def read_version(root_dir: str = ROOT_DIR) -> str:
    """
    :param root_dir:
    :return: the version, 0.0.0 when no file declares it
    """
    version_file = os.path.join(root_dir, 'version.txt')
    if os.path.exists(version_file):
        with open(version_file, 'r') as fp:
            return fp.read().strip()
    package_file = os.path.join(root_dir, 'package.json')
    if os.path.exists(package_file):
        with open(package_file, 'r') as fp:
            return json.load(fp).get('version', '0.0.0')
    return '0.0.0'


VERSION = read_version()
