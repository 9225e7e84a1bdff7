#!/usr/bin/env python3
"""Minimal counter plugin: counts Unicode code points.

Exists to exercise the plugin protocol end to end without any tokenizer
dependency; its counts must match the built-in chars counter exactly.
"""

import sys


def main():
    stdin = sys.stdin.buffer
    stdout = sys.stdout.buffer
    while True:
        header = stdin.readline()
        if not header:
            return
        n = int(header)
        payload = stdin.read(n)
        if len(payload) != n:
            return
        stdout.write(b"%d\n" % len(payload.decode("utf-8")))
        stdout.flush()


if __name__ == "__main__":
    main()
