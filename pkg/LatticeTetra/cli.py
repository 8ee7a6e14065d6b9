# LatticeTetra.cli - The "latticetetra" command
#
#  latticetetra sequence  --max-n N [--format csv|json] [--cache PATH] [--emit-total]
#  latticetetra solutions --d D [--format csv|json]
#  latticetetra oracle    --max-n N [--method quadruple|triangle] [--allow-large]
#  latticetetra graph     --max-d D [--dot PATH] [--components] [--csv PATH]
#  latticetetra plotdata  --max-n N [--format csv|json] [--cache PATH]
#
#  Every subcommand also takes --threads and -v/--verbose.
#
#  Exit codes: 0 ok, 2 usage, 3 oracle guard, 4 I/O or cache error.
#

# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :

import argparse
import csv
import json
import logging
import math
import sys

from .exceptions import InvalidInputError, GuardError, CacheFormatError
from .numtheory import threeSquaresPrimitive, lambdaCount, gamma2, piEpsilon
from .pipeline import sequence, defaultThreads
from .oracle import quadrupleCount, triangleCount, DEFAULT_ORACLE_QUADRUPLE_LIMIT, DEFAULT_ORACLE_TRIANGLE_LIMIT
from .rtgraph import buildGraph, exportDot, componentRows
from .rows import RowModel, RowField, SequenceRow, SequenceTotalRow, SolutionRow, OracleRow, PlotRow, ComponentRow

__all__ = ('main', 'buildParser', 'EXIT_OK', 'EXIT_USAGE', 'EXIT_GUARD', 'EXIT_IO', )

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_IO = 4


class SolutionCountsRow(RowModel):
	'''
		SolutionCountsRow - The closed-form counts printed after the solutions of one d
	'''

	FIELDS = [
		RowField('d'),
		RowField('lambda_count'),
		RowField('gamma2'),
		RowField('pi_epsilon'),
	]


def positiveInt(value):
	'''
		positiveInt - argparse type for integers >= 1
	'''
	try:
		ret = int(value)
	except ValueError:
		raise argparse.ArgumentTypeError('%s is not an integer' %(repr(value), ))
	if ret < 1:
		raise argparse.ArgumentTypeError('%d must be >= 1' %(ret, ))
	return ret


def writeRows(rows, rowType, outputFormat, stream):
	'''
		writeRows - Write rows as CSV (header first) or as a json array of row objects

		@param rows list<RowModel>
		@param rowType <type> - The row class, for the CSV header
		@param outputFormat <str> - "csv" or "json"
		@param stream - Writable text stream
	'''
	if outputFormat == 'json':
		stream.write(json.dumps([ row.asDict(forStorage=True) for row in rows ]))
		stream.write('\n')
		return

	writer = csv.writer(stream, lineterminator='\n')
	writer.writerow(rowType.fieldNames())
	for row in rows:
		writer.writerow(row.asList())


def cmdSequence(args, stdout):
	table = sequence(args.max_n, cache=args.cache, threads=args.threads, strictCache=True)

	if args.emit_total:
		rows = [ SequenceTotalRow(n=row.n, a103158=row.halfCount, total=row.total) for row in table ]
		writeRows(rows, SequenceTotalRow, args.format, stdout)
	else:
		rows = [ SequenceRow(n=row.n, a103158=row.halfCount) for row in table ]
		writeRows(rows, SequenceRow, args.format, stdout)

	return EXIT_OK


def cmdSolutions(args, stdout):
	d = args.d
	solutions = threeSquaresPrimitive(d)
	counts = SolutionCountsRow(d=d, lambda_count=lambdaCount(d), gamma2=gamma2(3 * d * d), pi_epsilon=piEpsilon(d))
	rows = [ SolutionRow(a=sol.a, b=sol.b, c=sol.c, d=sol.d) for sol in solutions ]

	if args.format == 'json':
		stdout.write(json.dumps({ 'solutions' : [ row.asDict() for row in rows ], 'counts' : counts.asDict() }))
		stdout.write('\n')
	else:
		writeRows(rows, SolutionRow, 'csv', stdout)
		stdout.write('\n')
		writeRows([counts], SolutionCountsRow, 'csv', stdout)

	return EXIT_OK


def cmdOracle(args, stdout):
	maxN = args.max_n
	if args.method == 'quadruple':
		if maxN > DEFAULT_ORACLE_QUADRUPLE_LIMIT:
			raise GuardError('the quadruple oracle is limited to --max-n <= %d' %(DEFAULT_ORACLE_QUADRUPLE_LIMIT, ))
		counter = quadrupleCount
	else:
		if maxN > DEFAULT_ORACLE_TRIANGLE_LIMIT and not args.allow_large:
			raise GuardError('the triangle oracle is limited to --max-n <= %d (use --allow-large)' %(DEFAULT_ORACLE_TRIANGLE_LIMIT, ))
		counter = lambda n : triangleCount(n, allowLarge=args.allow_large, workers=args.threads)

	rows = []
	for n in range(1, maxN + 1):
		total = counter(n)
		logger.info('oracle %s: T(%d) = %d', args.method, n, total)
		rows.append( OracleRow(n=n, total=total, a103158=total // 2) )

	writeRows(rows, OracleRow, args.format, stdout)
	return EXIT_OK


def cmdGraph(args, stdout):
	graph = buildGraph(args.max_d)

	if args.dot:
		with open(args.dot, 'w', encoding='utf-8') as dotFile:
			dotFile.write(exportDot(graph))

	if args.csv:
		with open(args.csv, 'w', encoding='utf-8', newline='') as csvFile:
			writeRows(componentRows(graph), ComponentRow, 'csv', csvFile)

	if args.components:
		writeRows(componentRows(graph), ComponentRow, args.format, stdout)
	elif not args.dot and not args.csv:
		stdout.write(exportDot(graph))

	return EXIT_OK


def cmdPlotdata(args, stdout):
	table = sequence(args.max_n, cache=args.cache, threads=args.threads, strictCache=True)

	rows = []
	for row in table:
		# Floats only appear here, from exact integers
		ratio = math.log(row.halfCount) / math.log(row.n + 1)
		rows.append( PlotRow(n=row.n, a103158=row.halfCount, ratio=ratio) )

	writeRows(rows, PlotRow, args.format, stdout)
	return EXIT_OK


class UsageError(Exception):
	'''
		UsageError - A command line that argparse rejected. Carries the usage text and the message.
	'''

	def __init__(self, usage, message):
		Exception.__init__(self, message)
		self.usage = usage
		self.message = message


class CommandParser(argparse.ArgumentParser):
	'''
		CommandParser - ArgumentParser whose errors are raised as UsageError instead of
		  being written to sys.stderr and exiting. Subcommand parsers share the class.
	'''

	def error(self, message):
		raise UsageError(self.format_usage(), '%s: error: %s' %(self.prog, message))


def buildParser():
	'''
		buildParser - The argparse parser of the latticetetra command

		@return <CommandParser>
	'''
	common = argparse.ArgumentParser(add_help=False)
	common.add_argument('--threads', type=positiveInt, default=defaultThreads(),
		help='Worker processes for counting (default: one per cpu). Results do not depend on it.')
	common.add_argument('-v', '--verbose', action='store_true', help='Log at DEBUG level on stderr')

	parser = CommandParser(prog='latticetetra',
		description='Enumerate and count regular tetrahedra with vertices in {0..n}^3 (OEIS A103158)')
	subparsers = parser.add_subparsers(dest='command', required=True)

	sequenceParser = subparsers.add_parser('sequence', parents=[common], help='A103158(n) for n = 1..N')
	sequenceParser.add_argument('--max-n', type=positiveInt, required=True)
	sequenceParser.add_argument('--format', choices=('csv', 'json'), default='csv')
	sequenceParser.add_argument('--cache', default=None, help='Irreducible record cache, reused and extended')
	sequenceParser.add_argument('--emit-total', action='store_true', help='Also print T(n) = 2 * A103158(n)')
	sequenceParser.set_defaults(func=cmdSequence)

	solutionsParser = subparsers.add_parser('solutions', parents=[common], help='Positive ordered primitive solutions of a^2+b^2+c^2 = 3d^2')
	solutionsParser.add_argument('--d', type=positiveInt, required=True)
	solutionsParser.add_argument('--format', choices=('csv', 'json'), default='csv')
	solutionsParser.set_defaults(func=cmdSolutions)

	oracleParser = subparsers.add_parser('oracle', parents=[common], help='Brute-force T(n)')
	oracleParser.add_argument('--max-n', type=positiveInt, required=True)
	oracleParser.add_argument('--method', choices=('quadruple', 'triangle'), default='triangle')
	oracleParser.add_argument('--allow-large', action='store_true', help='Lift the triangle oracle size guard')
	oracleParser.add_argument('--format', choices=('csv', 'json'), default='csv')
	oracleParser.set_defaults(func=cmdOracle)

	graphParser = subparsers.add_parser('graph', parents=[common], help='The face plane graph for d <= D')
	graphParser.add_argument('--max-d', type=positiveInt, required=True)
	graphParser.add_argument('--dot', default=None, help='Write the graph as DOT to this path')
	graphParser.add_argument('--components', action='store_true', help='Print the connected components')
	graphParser.add_argument('--csv', default=None, help='Write the connected components as CSV to this path')
	graphParser.add_argument('--format', choices=('csv', 'json'), default='csv')
	graphParser.set_defaults(func=cmdGraph)

	plotParser = subparsers.add_parser('plotdata', parents=[common], help='ln(A103158(n)) / ln(n+1) for n = 1..N')
	plotParser.add_argument('--max-n', type=positiveInt, required=True)
	plotParser.add_argument('--format', choices=('csv', 'json'), default='csv')
	plotParser.add_argument('--cache', default=None)
	plotParser.set_defaults(func=cmdPlotdata)

	return parser


def main(argv=None, stdout=None, stderr=None):
	'''
		main - Run the command

		@param argv list<str>/None - Arguments, sys.argv[1:] by default
		@param stdout/stderr - Text streams, sys.stdout / sys.stderr by default

		@return <int> - Exit code
	'''
	if stdout is None:
		stdout = sys.stdout
	if stderr is None:
		stderr = sys.stderr

	parser = buildParser()
	try:
		args = parser.parse_args(argv)
	except UsageError as e:
		stderr.write(e.usage)
		stderr.write('%s\n' %(e.message, ))
		return EXIT_USAGE
	except SystemExit as e:
		return e.code if isinstance(e.code, int) else EXIT_USAGE

	logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=stderr,
		format='%(levelname)s %(name)s: %(message)s')

	try:
		return args.func(args, stdout)
	except InvalidInputError as e:
		stderr.write('latticetetra: error: %s\n' %(str(e), ))
		return EXIT_USAGE
	except GuardError as e:
		stderr.write('latticetetra: guard: %s\n' %(str(e), ))
		return EXIT_GUARD
	except CacheFormatError as e:
		stderr.write('latticetetra: cache: %s\n' %(str(e), ))
		return EXIT_IO
	except OSError as e:
		stderr.write('latticetetra: i/o: %s\n' %(str(e), ))
		return EXIT_IO


# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :
