from flask import Flask
import platform

from app.antiplex import __version__
from app.antiplex.core.config import get_config
from app.antiplex.core.logger import configure_logging


def create_app(test_config=None):
    config = get_config()
    app = Flask(__name__)

    # Configure app
    app.config.from_mapping(
        ANTIPLEX_VERSION=__version__,
        ANTIPLEX_ENV=config.env,
        ANTIPLEX_CONFIG=config,

        # Request limits
        MAX_CONTENT_LENGTH=16 * 1024 * 1024,

        # Logging
        LOG_LEVEL=config.log_level,
        LOG_FILE=config.log_file,

        # System information
        ANTIPLEX_PLATFORM=platform.system(),
        ANTIPLEX_PYTHON_VERSION=platform.python_version(),
    )
    if test_config:
        app.config.update(test_config)

    # Configure logging
    configure_logging(app.config['LOG_LEVEL'], app.config['LOG_FILE'])

    # Register blueprints
    from app.routes import register_blueprints
    register_blueprints(app)

    # Register the command group (flask antiplex ...)
    from app.cli import cli
    app.cli.add_command(cli)

    app.logger.info(f"Application initialized successfully. Environment: {app.config['ANTIPLEX_ENV']}")

    return app
