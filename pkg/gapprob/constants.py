import os

DATA_DIR = 'data'
LOGS_DIR = 'logs'
DISTRIBUTION_CACHE_PATH = os.path.join(DATA_DIR, 'distributions.json')
LOG_FILE_PATH = os.path.join(LOGS_DIR, 'gapprob.log')

DEFAULT_DIGITS = 6
ENUMERATION_BUDGET = 20_000_000
THREADS = 1
LOG_LEVEL = 'INFO'
LOG_TO_FILE = False
USE_DISTRIBUTION_CACHE = False

# Trials per independently seeded Monte Carlo block.
SIMULATION_BLOCK_SIZE = 1 << 16
CONFIDENCE_LEVEL = 0.95

# Circle column of the published table for n=49, m=6, as printed.
PUBLISHED_CYCLE_TABLE_49_6 = {
    1: '0', 2: '0.503203', 3: '0.806793', 4: '0.937157', 5: '0.984296',
    6: '0.997447', 7: '0.999821', 8: '0.999999', 9: '1', 10: '1',
}
PUBLISHED_LINE_TABLE_49_6 = {
    1: '0', 2: '0.495198', 3: '0.766686', 4: '0.903824', 5: '0.966031',
    6: '0.990375', 7: '0.99806', 8: '0.999785', 9: '0.999994', 10: '1',
}
