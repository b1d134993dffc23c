#!/usr/bin/env node
/**
 * Render a bernfloat experiment CSV to a log-log figure.
 *
 * Usage: node dist/cli.js --input fig2.csv --figure fig2 --out fig2.svg
 * The output format follows the extension (.svg or .png).
 * Exit codes: 0 success, 1 rendering failure, 2 usage error.
 */

import { parseArgs } from "node:util";

import { isFigureId, render } from "./render.js";
import { SchemaError } from "./rows.js";

const USAGE =
  "usage: bernfloat-plots --input CSV --figure fig1|fig2|fig3 --out IMAGE(.svg|.png)\n";

export function main(argv: string[]): number {
  let parsed;
  try {
    parsed = parseArgs({
      args: argv,
      options: {
        input: { type: "string" },
        figure: { type: "string" },
        out: { type: "string" },
      },
      strict: true,
    });
  } catch (error) {
    process.stderr.write(`${(error as Error).message}\n${USAGE}`);
    return 2;
  }

  const { input, figure, out } = parsed.values;
  if (!input || !figure || !out) {
    process.stderr.write(USAGE);
    return 2;
  }
  if (!isFigureId(figure)) {
    process.stderr.write(`unknown figure id "${figure}"\n${USAGE}`);
    return 2;
  }

  try {
    render({ input, figure, output: out });
  } catch (error) {
    if (error instanceof SchemaError) {
      process.stderr.write(`schema error: ${error.message}\n`);
    } else {
      process.stderr.write(`error: ${(error as Error).message}\n`);
    }
    return 1;
  }
  return 0;
}

const invokedDirectly =
  process.argv[1] !== undefined && import.meta.url === new URL(`file://${process.argv[1]}`).href;
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
