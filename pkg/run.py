import os

from tangentcone import create_app


def main():
    """Main function to run the command-line application"""
    config_name = os.environ.get('TANGENTCONE_ENV', 'production')
    cli = create_app(config_name)
    cli(obj={})


if __name__ == '__main__':
    main()
