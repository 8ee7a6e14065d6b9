# LatticeTetra.pipeline - The list of irreducible regular tetrahedra and the counts T(n) built from it
#
#  Every regular tetrahedron with vertices in {0..n}^3 is a dilation j*T of exactly one irreducible
#   class T (up to cube symmetries and translations). The irreducible classes are generated face plane
#   by face plane, and T(n) is the sum over classes and dilations of the number of copies in [0,n]^3.
#   A103158(n) = T(n) / 2.
#

# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :

import logging
import os
import tempfile

from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor

from .exceptions import InvalidInputError, FormulaViolationError, GeometryError, NotLatticeRegularError, \
	CacheFormatError
from .numtheory import PrimitiveSolution, MNPair, isPrimitiveSolution, threeSquaresPrimitive, kValues, mnPrimitive
from .facegen import Tetra, tetraPair, normalizeOctant, enclosingCube, isRegular, maxFaceD, isIrreducible
from .orbits import classKey, orbitExtents, orbitStatsFromExtents
from .rows import CacheHeaderRow, CacheRecordRow
from .RecordQueryableList import RecordQueryableList

__all__ = ('IrreducibleRecord', 'CountRow', 'CountTable',
	'irreducibleList', 'extendRecords', 'totalCounts', 'totalCount', 'sequence',
	'loadCache', 'saveCache', 'defaultThreads',
)

logger = logging.getLogger(__name__)


class IrreducibleRecord(object):
	'''
		IrreducibleRecord - An irreducible lattice regular tetrahedron and where it came from.

		  d      - face plane parameter of the generating face
		  k      - side multiplier, the side is d*k*sqrt(2)
		  cube   - size of the enclosing cube of tetra
		  tetra  - the normalized tetrahedron
		  source - PrimitiveSolution of the generating face
		  mn     - MNPair of the generating triangle
		  bound  - the n_max it was generated under (cache bookkeeping only)
	'''

	# Marker checked by RecordQueryableList
	_is_irreducible_record = True

	__slots__ = ('d', 'k', 'cube', 'tetra', 'source', 'mn', 'bound')

	def __init__(self, d, k, cube, tetra, source, mn, bound):
		self.d = d
		self.k = k
		self.cube = cube
		self.tetra = tetra
		self.source = source
		self.mn = mn
		self.bound = bound

	@property
	def side(self):
		'''
			side - lambda = d * k, the side is lambda * sqrt(2)
		'''
		return self.d * self.k

	def identity(self):
		return (self.d, self.k, self.cube, self.tetra, self.source, self.mn)

	def asRow(self):
		'''
			asRow - This record as a cache line row

			@return <CacheRecordRow>
		'''
		return CacheRecordRow(d=self.d, k=self.k, m=self.bound, n_pair=self.mn, cube=self.cube,
			vertices=self.tetra, solution=self.source)

	@classmethod
	def fromRow(cls, row):
		'''
			fromRow - Rebuild a record from a cache row, checking every record invariant

			@param row <CacheRecordRow>

			@return <IrreducibleRecord>

			@raises InvalidInputError - The row does not describe a valid irreducible record
		'''
		source = PrimitiveSolution(*row.solution)
		if not isPrimitiveSolution(source) or source.d != row.d:
			raise InvalidInputError('solution %s is not a positive ordered primitive solution for d=%d' %(list(row.solution), row.d))

		mn = MNPair(*row.n_pair)
		if row.k < 1 or mn.norm != row.k * row.k:
			raise InvalidInputError('n_pair %s does not satisfy m^2 - mn + n^2 = k^2 for k=%d' %(list(row.n_pair), row.k))

		tetra = Tetra(row.vertices)
		if tetra != row.vertices or normalizeOctant(tetra) != tetra:
			raise InvalidInputError('vertices %s are not a normalized sorted tetrahedron' %(str(row.vertices), ))

		side = row.d * row.k
		if isRegular(tetra) != side:
			raise InvalidInputError('vertices are not a regular tetrahedron with side %d*sqrt(2)' %(side, ))

		if enclosingCube(tetra) != row.cube:
			raise InvalidInputError('cube %d does not match the vertices (enclosing cube %d)' %(row.cube, enclosingCube(tetra)))

		if side > row.m:
			raise InvalidInputError('side %d exceeds the generation bound m=%d' %(side, row.m))

		return cls(row.d, row.k, row.cube, tetra, source, mn, row.m)

	def __eq__(self, other):
		if not isinstance(other, IrreducibleRecord):
			return False
		return self.identity() == other.identity()

	def __ne__(self, other):
		return not self.__eq__(other)

	def __hash__(self):
		return hash(self.identity())

	def __repr__(self):
		return 'IrreducibleRecord(d=%d, k=%d, cube=%d, tetra=%s, source=%s, mn=%s)' %(self.d, self.k, self.cube,
			repr(list(self.tetra)), repr(tuple(self.source)), repr(tuple(self.mn)))


CountRow = namedtuple('CountRow', ('n', 'halfCount', 'total'))


class CountTable(object):
	'''
		CountTable - Rows (n, A103158(n), T(n)) for n = 1..n_max
	'''

	def __init__(self, rows):
		self.rows = [ CountRow(*row) for row in rows ]

		previous = None
		for (idx, row) in enumerate(self.rows):
			if row.n != idx + 1:
				raise InvalidInputError('CountTable rows must be n = 1, 2, ...; row %d has n=%d' %(idx, row.n))
			if row.total != 2 * row.halfCount:
				raise FormulaViolationError('CountTable: T(%d)=%d is not twice %d' %(row.n, row.total, row.halfCount))
			if previous is not None and row.halfCount < previous:
				raise FormulaViolationError('CountTable: value at n=%d decreased (%d < %d)' %(row.n, row.halfCount, previous))
			previous = row.halfCount

	def __iter__(self):
		return iter(self.rows)

	def __len__(self):
		return len(self.rows)

	def __getitem__(self, n):
		'''
			__getitem__ - The row for n (1-based)
		'''
		if n < 1 or n > len(self.rows):
			raise IndexError('n=%d is outside 1..%d' %(n, len(self.rows)))
		return self.rows[n - 1]

	def halfCounts(self):
		return [ row.halfCount for row in self.rows ]

	def totals(self):
		return [ row.total for row in self.rows ]

	def __eq__(self, other):
		return isinstance(other, CountTable) and self.rows == other.rows

	def __ne__(self, other):
		return not self.__eq__(other)

	def __repr__(self):
		return 'CountTable(%s)' %(repr(self.rows), )


def defaultThreads():
	return os.cpu_count() or 1


def _checkBound(name, value):
	if isinstance(value, bool) or not isinstance(value, int) or value < 1:
		raise InvalidInputError('%s must be a positive integer, got %r' %(name, value))


def _generateRecords(nLow, nHigh, seenKeys):
	'''
		_generateRecords - Records for every configuration with nLow < d*k <= nHigh, in generation order:
		  k ascending, then the primitive (m, n) of k, then odd d ascending, then the solutions of d.

		  For every primitive (m, n) the mirror pair (n - m, n) is completed too (except for the k = 1
		  seed, whose mirror only repeats it), which visits the four translation classes of triangles
		  with that side.

		@param nLow <int> - Configurations with d*k <= nLow are skipped (already generated)
		@param nHigh <int> - Generation bound
		@param seenKeys <set> - classKey of every record already held. Updated in place.

		@return list<IrreducibleRecord>
	'''
	ret = []
	solutionsByD = {}
	skipped = { 'reducible' : 0, 'face' : 0, 'duplicate' : 0 }

	for k in kValues(nHigh):
		for mn in mnPrimitive(k):
			if k == 1:
				pairs = (mn, )
			else:
				pairs = (mn, MNPair(mn.n - mn.m, mn.n))

			for d in range(1, nHigh // k + 1, 2):
				side = d * k
				if side <= nLow:
					continue

				if d not in solutionsByD:
					solutionsByD[d] = threeSquaresPrimitive(d)

				for sol in solutionsByD[d]:
					for pair in pairs:
						for tetra in tetraPair(sol, pair):
							if isRegular(tetra) != side:
								raise NotLatticeRegularError('%s over %s with %s is not regular with side %d' %(repr(tetra), repr(sol), repr(pair), side))

							if not isIrreducible(tetra):
								logger.debug('skip reducible %s (d=%d k=%d mn=%s)', list(tetra), d, k, tuple(pair))
								skipped['reducible'] += 1
								continue

							if k > 1 and maxFaceD(tetra) == side:
								logger.debug('skip %s: a face with d=%d generates it at k=1', list(tetra), side)
								skipped['face'] += 1
								continue

							key = classKey(tetra)
							if key in seenKeys:
								logger.debug('skip duplicate class %s (d=%d k=%d mn=%s)', list(tetra), d, k, tuple(pair))
								skipped['duplicate'] += 1
								continue

							seenKeys.add(key)
							ret.append( IrreducibleRecord(d, k, enclosingCube(tetra), tetra, sol, pair, nHigh) )

	logger.info('Generated %d irreducible records for %d < side <= %d (skipped %d reducible, %d face-covered, %d duplicate)',
		len(ret), nLow, nHigh, skipped['reducible'], skipped['face'], skipped['duplicate'])

	return ret


def _sortRecords(records):
	return RecordQueryableList(sorted(records, key=lambda record : (record.side, record.tetra)), recordType=IrreducibleRecord)


def irreducibleList(nMax):
	'''
		irreducibleList - One record per class of irreducible regular tetrahedra with side d*k <= nMax.

		@param nMax <int> - >= 1

		@return RecordQueryableList<IrreducibleRecord> - Sorted by (d*k, tetra)
	'''
	_checkBound('nMax', nMax)

	return _sortRecords(_generateRecords(0, nMax, set()))


def loadCache(path):
	'''
		loadCache - Read a record cache.

		  The first line is a header with the bound the cache covers and the number of record
		  lines after it. Every record line is validated, and the count must match.

		@param path <str> - Cache file. A missing file is an empty cache.

		@return tuple( RecordQueryableList<IrreducibleRecord>, <int> coverage ) - coverage is the
		   bound from the header (0 when the file does not exist)

		@raises CacheFormatError - The header is missing or wrong, a line cannot be decoded or
		   fails validation, or the number of records does not match the header
		@raises OSError - The file cannot be read
	'''
	records = RecordQueryableList(recordType=IrreducibleRecord)

	if not os.path.exists(path):
		return (records, 0)

	header = None
	with open(path, 'r', encoding='utf-8') as cacheFile:
		for (lineNumber, line) in enumerate(cacheFile, 1):
			line = line.strip()
			if not line:
				continue

			if header is None:
				try:
					header = CacheHeaderRow.fromJsonLine(line)
				except InvalidInputError as e:
					raise CacheFormatError('bad cache header: %s' %(str(e), ), lineNumber=lineNumber, line=line)
				if header.covers < 1 or header.records < 0:
					raise CacheFormatError('bad cache header: covers=%d records=%d' %(header.covers, header.records), lineNumber=lineNumber, line=line)
				continue

			try:
				record = IrreducibleRecord.fromRow(CacheRecordRow.fromJsonLine(line))
			except (InvalidInputError, GeometryError) as e:
				raise CacheFormatError(str(e), lineNumber=lineNumber, line=line)

			if record.bound > header.covers:
				raise CacheFormatError('record bound m=%d exceeds the cache bound %d' %(record.bound, header.covers), lineNumber=lineNumber, line=line)

			records.append(record)

	if header is None:
		raise CacheFormatError('cache file %s has no header line' %(path, ))

	if len(records) != header.records:
		raise CacheFormatError('header announces %d records but %d were read' %(header.records, len(records)))

	logger.debug('Read %d records covering n <= %d from %s', len(records), header.covers, path)
	return (records, header.covers)


def saveCache(path, records, coverage):
	'''
		saveCache - Write the header and the records, one json line each, replacing the file atomically

		@param path <str>
		@param records - IrreducibleRecord objects
		@param coverage <int> - The bound the records are complete for
	'''
	records = list(records)
	header = CacheHeaderRow(covers=coverage, records=len(records))

	directory = os.path.dirname(os.path.abspath(path))
	(fd, tempPath) = tempfile.mkstemp(prefix='.latticetetra-', suffix='.tmp', dir=directory)
	try:
		with os.fdopen(fd, 'w', encoding='utf-8') as tempFile:
			tempFile.write(header.toJsonLine())
			tempFile.write('\n')
			for record in records:
				tempFile.write(record.asRow().toJsonLine())
				tempFile.write('\n')
		os.replace(tempPath, path)
	except:
		try:
			os.unlink(tempPath)
		except OSError:
			pass
		raise


def extendRecords(nMax, cache=None, strictCache=False):
	'''
		extendRecords - The irreducible records for nMax, reusing and extending a cache file.

		  Only configurations with coverage < d*k <= nMax are generated; the cache is rewritten
		  whenever its coverage grows.

		@param nMax <int>
		@param cache <str/None> - Cache path, or None to generate everything
		@param strictCache <bool> - If True a corrupt cache raises CacheFormatError, otherwise it is
		   ignored with a warning and regenerated

		@return RecordQueryableList<IrreducibleRecord> - Records with side <= nMax, sorted
	'''
	_checkBound('nMax', nMax)

	if cache is None:
		return irreducibleList(nMax)

	try:
		(cached, coverage) = loadCache(cache)
		seenKeys = set( classKey(record.tetra) for record in cached )
		if len(seenKeys) != len(cached):
			raise CacheFormatError('cache holds the same tetrahedron class more than once')
	except CacheFormatError as e:
		if strictCache:
			raise
		logger.warning('Ignoring unusable cache %s: %s', cache, str(e))
		(cached, coverage, seenKeys) = (RecordQueryableList(recordType=IrreducibleRecord), 0, set())

	if coverage >= nMax:
		logger.info('Reusing %d cached records (cache covers n <= %d)', len(cached), coverage)
		return _sortRecords(cached.filter(side__lte=nMax))

	added = _generateRecords(coverage, nMax, seenKeys)
	logger.info('Reused %d cached records, generated %d for %d < side <= %d', len(cached), len(added), coverage, nMax)

	allRecords = _sortRecords(list(cached) + added)
	saveCache(cache, allRecords, nMax)

	return allRecords


def _recordContributions(task):
	'''
		_recordContributions - Copies of the record's dilations j*T inside [0,n]^3 for n = 0..nMax.

		  Module level so it can be sent to worker processes.

		@param task <tuple> - (vertices, cube, side, nMax)

		@return list<int> - Index n holds the contribution to T(n)
	'''
	(vertices, cube, side, nMax) = task
	shapeExtents = orbitExtents(Tetra(vertices))

	ret = [0] * (nMax + 1)
	j = 1
	while j * cube <= nMax and j * side <= nMax:
		stats = orbitStatsFromExtents(shapeExtents, cube, j)
		for n in range(stats.m, nMax + 1):
			ret[n] += stats.countInCube(n)
		j += 1

	return ret


def totalCounts(nMax, records, threads=1):
	'''
		totalCounts - T(n) for every n = 1..nMax in one pass

		@param nMax <int>
		@param records - IrreducibleRecord objects covering every side <= nMax
		@param threads <int/None> - Worker processes. None for one per cpu. Any value gives the same result.

		@return list<int> - T(1), ..., T(nMax)
	'''
	_checkBound('nMax', nMax)
	if threads is None:
		threads = defaultThreads()
	_checkBound('threads', threads)

	tasks = [ (tuple(record.tetra), record.cube, record.side, nMax) for record in records if record.side <= nMax ]

	totals = [0] * (nMax + 1)
	if threads > 1 and len(tasks) > 1:
		chunkSize = max(1, len(tasks) // (threads * 4))
		with ProcessPoolExecutor(max_workers=threads) as executor:
			# map yields in task order, so the sum is independent of scheduling
			for contribution in executor.map(_recordContributions, tasks, chunksize=chunkSize):
				for n in range(nMax + 1):
					totals[n] += contribution[n]
	else:
		for task in tasks:
			contribution = _recordContributions(task)
			for n in range(nMax + 1):
				totals[n] += contribution[n]

	return totals[1:]


def totalCount(n, records):
	'''
		totalCount - A103158(n) = T(n) / 2

		@param n <int>
		@param records - IrreducibleRecord objects covering every side <= n

		@return <int>

		@raises FormulaViolationError - T(n) is odd
	'''
	total = totalCounts(n, records, threads=1)[n - 1]
	if total % 2:
		raise FormulaViolationError('T(%d) = %d is odd' %(n, total))
	return total // 2


def sequence(nMax, cache=None, threads=None, strictCache=False):
	'''
		sequence - The CountTable (n, A103158(n), T(n)) for n = 1..nMax

		@param nMax <int> - >= 1
		@param cache <str/None> - Optional record cache path, reused and extended
		@param threads <int/None> - Worker processes for counting. None for one per cpu.
		@param strictCache <bool> - Raise on a corrupt cache instead of regenerating

		@return <CountTable>
	'''
	records = extendRecords(nMax, cache=cache, strictCache=strictCache)
	totals = totalCounts(nMax, records, threads=threads)

	rows = []
	for (idx, total) in enumerate(totals):
		n = idx + 1
		if total % 2:
			raise FormulaViolationError('T(%d) = %d is odd' %(n, total))
		rows.append( CountRow(n, total // 2, total) )

	return CountTable(rows)


# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :
