#!/usr/bin/env python3
"""Token-counter plugin backed by the o200k_base BPE tokenizer.

Speaks the counter plugin protocol on stdio: each request is a decimal
payload byte length, a newline, then that many UTF-8 bytes; each response
is the decimal token count and a newline.

Needs the tiktoken package with its vocabulary available locally; exits
with a message on stderr otherwise (the harness treats the counter as
unavailable).
"""

import sys

try:
    import tiktoken
    ENC = tiktoken.get_encoding("o200k_base")
except Exception as e:  # import failure or vocabulary download failure
    print(f"o200k_base tokenizer unavailable: {e}", file=sys.stderr)
    sys.exit(3)


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
        count = len(ENC.encode(payload.decode("utf-8")))
        stdout.write(b"%d\n" % count)
        stdout.flush()


if __name__ == "__main__":
    main()
