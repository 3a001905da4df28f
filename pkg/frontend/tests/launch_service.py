"""Starts the session service for frontend tests.

Usage: python3 launch_service.py --port 8123 --mock /path/to/transcript.json
"""

import argparse

import uvicorn

from chatbim.service.app import ServiceConfig, create_app


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--port", type=int, required=True)
    parser.add_argument("--mock", required=True)
    args = parser.parse_args()
    config = ServiceConfig(host="127.0.0.1", port=args.port, mock_transcript_path=args.mock)
    uvicorn.run(create_app(config), host="127.0.0.1", port=args.port, log_level="warning")


if __name__ == "__main__":
    main()
