import os
from dotenv import load_dotenv

load_dotenv()


class Config:
    # Jet truncation order D used when --trunc is not given
    TRUNC = int(os.environ.get('TANGENTCONE_TRUNC', 8))

    LOG_LEVEL = os.environ.get('TANGENTCONE_LOG_LEVEL', 'WARNING')

    # Sampling of generic algebra points
    SEED = int(os.environ.get('TANGENTCONE_SEED', 20240229))
    SAMPLE_RETRIES = int(os.environ.get('TANGENTCONE_SAMPLE_RETRIES', 50))
    COEFF_BOUND = int(os.environ.get('TANGENTCONE_COEFF_BOUND', 3))

    # Hull basis elements run through the full quadratic check in thm1
    WITNESS_LIMIT = int(os.environ.get('TANGENTCONE_WITNESS_LIMIT', 16))

    TESTING = False


class DevelopmentConfig(Config):
    """Development configuration"""
    LOG_LEVEL = os.environ.get('TANGENTCONE_LOG_LEVEL', 'INFO')


class ProductionConfig(Config):
    """Production configuration"""
    pass


class TestingConfig(Config):
    """Testing configuration"""
    TESTING = True
    SEED = 12345
    LOG_LEVEL = 'WARNING'


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': ProductionConfig
}


def get_config(config_name=None):
    name = config_name or os.environ.get('TANGENTCONE_ENV', 'production')
    if name not in config:
        raise KeyError(f"unknown configuration {name!r}; expected one of {sorted(config)}")
    return config[name]
