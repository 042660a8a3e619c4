import logging
import sys

from dotenv import load_dotenv

load_dotenv()

from recon_ds.cli import run
from recon_ds.core.config import get_config

config = get_config()

# Setup logging
logging.basicConfig(
    level=getattr(logging, config.logging.log_level.upper(), logging.INFO),
    format='[{asctime}] [{levelname:<8}] {name}: {message}',
    datefmt='%Y-%m-%d %H:%M:%S',
    style='{',
    handlers=[
        logging.FileHandler(config.logging.log_file, encoding='utf-8', mode='a'),
        logging.StreamHandler()
    ]
)
logger = logging.getLogger('recon')
logger.debug(f"Using configuration {config.config_path} (max_n={config.max_n}, jobs={config.sweeps.jobs})")


if __name__ == '__main__':
    try:
        sys.exit(run())
    except KeyboardInterrupt:
        logger.info("Stopped by keyboard interrupt")
        sys.exit(130)
