//! Minimal tag dictionary used to resolve VRs when parsing implicit-VR
//! streams and to type replacement values. Covers the attributes the built-in
//! de-identification profiles act on plus the structural tags the toolkit
//! reads; everything else resolves to UN and is carried opaquely.

use super::{Tag, Vr};

// Sorted by (group, element); looked up by binary search.
#[rustfmt::skip]
static TABLE: &[(u16, u16, Vr)] = &[
    (0x0008, 0x0005, Vr::CS), // SpecificCharacterSet
    (0x0008, 0x0008, Vr::CS), // ImageType
    (0x0008, 0x0014, Vr::UI), // InstanceCreatorUID
    (0x0008, 0x0016, Vr::UI), // SOPClassUID
    (0x0008, 0x0018, Vr::UI), // SOPInstanceUID
    (0x0008, 0x0020, Vr::DA), // StudyDate
    (0x0008, 0x0021, Vr::DA), // SeriesDate
    (0x0008, 0x0022, Vr::DA), // AcquisitionDate
    (0x0008, 0x0023, Vr::DA), // ContentDate
    (0x0008, 0x0024, Vr::DA), // OverlayDate
    (0x0008, 0x0025, Vr::DA), // CurveDate
    (0x0008, 0x002A, Vr::DT), // AcquisitionDateTime
    (0x0008, 0x0030, Vr::TM), // StudyTime
    (0x0008, 0x0031, Vr::TM), // SeriesTime
    (0x0008, 0x0032, Vr::TM), // AcquisitionTime
    (0x0008, 0x0033, Vr::TM), // ContentTime
    (0x0008, 0x0034, Vr::TM), // OverlayTime
    (0x0008, 0x0035, Vr::TM), // CurveTime
    (0x0008, 0x0050, Vr::SH), // AccessionNumber
    (0x0008, 0x0060, Vr::CS), // Modality
    (0x0008, 0x0070, Vr::LO), // Manufacturer
    (0x0008, 0x0080, Vr::LO), // InstitutionName
    (0x0008, 0x0081, Vr::ST), // InstitutionAddress
    (0x0008, 0x0082, Vr::SQ), // InstitutionCodeSequence
    (0x0008, 0x0090, Vr::PN), // ReferringPhysicianName
    (0x0008, 0x0092, Vr::ST), // ReferringPhysicianAddress
    (0x0008, 0x0094, Vr::SH), // ReferringPhysicianTelephoneNumbers
    (0x0008, 0x0096, Vr::SQ), // ReferringPhysicianIdentificationSequence
    (0x0008, 0x0100, Vr::SH), // CodeValue
    (0x0008, 0x0102, Vr::SH), // CodingSchemeDesignator
    (0x0008, 0x0104, Vr::LO), // CodeMeaning
    (0x0008, 0x1010, Vr::SH), // StationName
    (0x0008, 0x1030, Vr::LO), // StudyDescription
    (0x0008, 0x103E, Vr::LO), // SeriesDescription
    (0x0008, 0x1040, Vr::LO), // InstitutionalDepartmentName
    (0x0008, 0x1048, Vr::PN), // PhysiciansOfRecord
    (0x0008, 0x1049, Vr::SQ), // PhysiciansOfRecordIdentificationSequence
    (0x0008, 0x1050, Vr::PN), // PerformingPhysicianName
    (0x0008, 0x1052, Vr::SQ), // PerformingPhysicianIdentificationSequence
    (0x0008, 0x1060, Vr::PN), // NameOfPhysiciansReadingStudy
    (0x0008, 0x1062, Vr::SQ), // PhysiciansReadingStudyIdentificationSequence
    (0x0008, 0x1070, Vr::PN), // OperatorsName
    (0x0008, 0x1072, Vr::SQ), // OperatorIdentificationSequence
    (0x0008, 0x1080, Vr::LO), // AdmittingDiagnosesDescription
    (0x0008, 0x1084, Vr::SQ), // AdmittingDiagnosesCodeSequence
    (0x0008, 0x1110, Vr::SQ), // ReferencedStudySequence
    (0x0008, 0x1111, Vr::SQ), // ReferencedPerformedProcedureStepSequence
    (0x0008, 0x1115, Vr::SQ), // ReferencedSeriesSequence
    (0x0008, 0x1120, Vr::SQ), // ReferencedPatientSequence
    (0x0008, 0x1140, Vr::SQ), // ReferencedImageSequence
    (0x0008, 0x1150, Vr::UI), // ReferencedSOPClassUID
    (0x0008, 0x1155, Vr::UI), // ReferencedSOPInstanceUID
    (0x0008, 0x2111, Vr::ST), // DerivationDescription
    (0x0008, 0x3010, Vr::UI), // IrradiationEventUID
    (0x0008, 0x9215, Vr::SQ), // DerivationCodeSequence
    (0x0010, 0x0010, Vr::PN), // PatientName
    (0x0010, 0x0020, Vr::LO), // PatientID
    (0x0010, 0x0021, Vr::LO), // IssuerOfPatientID
    (0x0010, 0x0030, Vr::DA), // PatientBirthDate
    (0x0010, 0x0032, Vr::TM), // PatientBirthTime
    (0x0010, 0x0040, Vr::CS), // PatientSex
    (0x0010, 0x0050, Vr::SQ), // PatientInsurancePlanCodeSequence
    (0x0010, 0x0101, Vr::SQ), // PatientPrimaryLanguageCodeSequence
    (0x0010, 0x0102, Vr::SQ), // PatientPrimaryLanguageModifierCodeSequence
    (0x0010, 0x1000, Vr::LO), // OtherPatientIDs
    (0x0010, 0x1001, Vr::PN), // OtherPatientNames
    (0x0010, 0x1002, Vr::SQ), // OtherPatientIDsSequence
    (0x0010, 0x1005, Vr::PN), // PatientBirthName
    (0x0010, 0x1010, Vr::AS), // PatientAge
    (0x0010, 0x1020, Vr::DS), // PatientSize
    (0x0010, 0x1030, Vr::DS), // PatientWeight
    (0x0010, 0x1040, Vr::LO), // PatientAddress
    (0x0010, 0x1060, Vr::PN), // PatientMotherBirthName
    (0x0010, 0x1080, Vr::LO), // MilitaryRank
    (0x0010, 0x1081, Vr::LO), // BranchOfService
    (0x0010, 0x1090, Vr::LO), // MedicalRecordLocator
    (0x0010, 0x2000, Vr::LO), // MedicalAlerts
    (0x0010, 0x2110, Vr::LO), // Allergies
    (0x0010, 0x2150, Vr::LO), // CountryOfResidence
    (0x0010, 0x2152, Vr::LO), // RegionOfResidence
    (0x0010, 0x2154, Vr::SH), // PatientTelephoneNumbers
    (0x0010, 0x2160, Vr::SH), // EthnicGroup
    (0x0010, 0x2180, Vr::SH), // Occupation
    (0x0010, 0x21A0, Vr::CS), // SmokingStatus
    (0x0010, 0x21B0, Vr::LT), // AdditionalPatientHistory
    (0x0010, 0x21C0, Vr::US), // PregnancyStatus
    (0x0010, 0x21D0, Vr::DA), // LastMenstrualDate
    (0x0010, 0x21F0, Vr::LO), // PatientReligiousPreference
    (0x0010, 0x2203, Vr::CS), // PatientSexNeutered
    (0x0010, 0x2297, Vr::PN), // ResponsiblePerson
    (0x0010, 0x2299, Vr::LO), // ResponsibleOrganization
    (0x0010, 0x4000, Vr::LT), // PatientComments
    (0x0012, 0x0062, Vr::CS), // PatientIdentityRemoved
    (0x0012, 0x0063, Vr::LO), // DeidentificationMethod
    (0x0012, 0x0064, Vr::SQ), // DeidentificationMethodCodeSequence
    (0x0018, 0x0050, Vr::DS), // SliceThickness
    (0x0018, 0x0088, Vr::DS), // SpacingBetweenSlices
    (0x0018, 0x1000, Vr::LO), // DeviceSerialNumber
    (0x0018, 0x1002, Vr::UI), // DeviceUID
    (0x0018, 0x1004, Vr::LO), // PlateID
    (0x0018, 0x1005, Vr::LO), // GeneratorID
    (0x0018, 0x1007, Vr::LO), // CassetteID
    (0x0018, 0x1008, Vr::LO), // GantryID
    (0x0018, 0x1030, Vr::LO), // ProtocolName
    (0x0018, 0x1400, Vr::LO), // AcquisitionDeviceProcessingDescription
    (0x0018, 0x4000, Vr::LT), // AcquisitionComments
    (0x0018, 0x700A, Vr::SH), // DetectorID
    (0x0018, 0x9424, Vr::LT), // AcquisitionProtocolDescription
    (0x0018, 0xA003, Vr::ST), // ContributionDescription
    (0x0020, 0x000D, Vr::UI), // StudyInstanceUID
    (0x0020, 0x000E, Vr::UI), // SeriesInstanceUID
    (0x0020, 0x0010, Vr::SH), // StudyID
    (0x0020, 0x0011, Vr::IS), // SeriesNumber
    (0x0020, 0x0013, Vr::IS), // InstanceNumber
    (0x0020, 0x0032, Vr::DS), // ImagePositionPatient
    (0x0020, 0x0037, Vr::DS), // ImageOrientationPatient
    (0x0020, 0x0052, Vr::UI), // FrameOfReferenceUID
    (0x0020, 0x0200, Vr::UI), // SynchronizationFrameOfReferenceUID
    (0x0020, 0x3401, Vr::SH), // ModifyingDeviceID
    (0x0020, 0x3404, Vr::SH), // ModifyingDeviceManufacturer
    (0x0020, 0x3406, Vr::SH), // ModifiedImageDescription
    (0x0020, 0x4000, Vr::LT), // ImageComments
    (0x0020, 0x9158, Vr::LT), // FrameComments
    (0x0020, 0x9161, Vr::UI), // ConcatenationUID
    (0x0020, 0x9164, Vr::UI), // DimensionOrganizationUID
    (0x0028, 0x0002, Vr::US), // SamplesPerPixel
    (0x0028, 0x0004, Vr::CS), // PhotometricInterpretation
    (0x0028, 0x0006, Vr::US), // PlanarConfiguration
    (0x0028, 0x0008, Vr::IS), // NumberOfFrames
    (0x0028, 0x0010, Vr::US), // Rows
    (0x0028, 0x0011, Vr::US), // Columns
    (0x0028, 0x0030, Vr::DS), // PixelSpacing
    (0x0028, 0x0100, Vr::US), // BitsAllocated
    (0x0028, 0x0101, Vr::US), // BitsStored
    (0x0028, 0x0102, Vr::US), // HighBit
    (0x0028, 0x0103, Vr::US), // PixelRepresentation
    (0x0028, 0x1052, Vr::DS), // RescaleIntercept
    (0x0028, 0x1053, Vr::DS), // RescaleSlope
    (0x0028, 0x1199, Vr::UI), // PaletteColorLookupTableUID
    (0x0028, 0x1214, Vr::UI), // LargePaletteColorLookupTableUID
    (0x0032, 0x0012, Vr::LO), // StudyIDIssuer
    (0x0032, 0x1020, Vr::LO), // ScheduledStudyLocation
    (0x0032, 0x1021, Vr::AE), // ScheduledStudyLocationAETitle
    (0x0032, 0x1030, Vr::LO), // ReasonForStudy
    (0x0032, 0x1032, Vr::PN), // RequestingPhysician
    (0x0032, 0x1033, Vr::LO), // RequestingService
    (0x0032, 0x1060, Vr::LO), // RequestedProcedureDescription
    (0x0032, 0x1070, Vr::LO), // RequestedContrastAgent
    (0x0032, 0x4000, Vr::LT), // StudyComments
    (0x0038, 0x0010, Vr::LO), // AdmissionID
    (0x0038, 0x0011, Vr::LO), // IssuerOfAdmissionID
    (0x0038, 0x001E, Vr::LO), // ScheduledPatientInstitutionResidence
    (0x0038, 0x0020, Vr::DA), // AdmittingDate
    (0x0038, 0x0021, Vr::TM), // AdmittingTime
    (0x0038, 0x0040, Vr::LO), // DischargeDiagnosisDescription
    (0x0038, 0x0050, Vr::LO), // SpecialNeeds
    (0x0038, 0x0060, Vr::LO), // ServiceEpisodeID
    (0x0038, 0x0061, Vr::LO), // IssuerOfServiceEpisodeID
    (0x0038, 0x0062, Vr::LO), // ServiceEpisodeDescription
    (0x0038, 0x0300, Vr::LO), // CurrentPatientLocation
    (0x0038, 0x0400, Vr::LO), // PatientInstitutionResidence
    (0x0038, 0x0500, Vr::LO), // PatientState
    (0x0038, 0x4000, Vr::LT), // VisitComments
    (0x0040, 0x0001, Vr::AE), // ScheduledStationAETitle
    (0x0040, 0x0002, Vr::DA), // ScheduledProcedureStepStartDate
    (0x0040, 0x0003, Vr::TM), // ScheduledProcedureStepStartTime
    (0x0040, 0x0004, Vr::DA), // ScheduledProcedureStepEndDate
    (0x0040, 0x0005, Vr::TM), // ScheduledProcedureStepEndTime
    (0x0040, 0x0006, Vr::PN), // ScheduledPerformingPhysicianName
    (0x0040, 0x0007, Vr::LO), // ScheduledProcedureStepDescription
    (0x0040, 0x000B, Vr::SQ), // ScheduledPerformingPhysicianIdentificationSequence
    (0x0040, 0x0010, Vr::SH), // ScheduledStationName
    (0x0040, 0x0011, Vr::SH), // ScheduledProcedureStepLocation
    (0x0040, 0x0012, Vr::LO), // PreMedication
    (0x0040, 0x0241, Vr::AE), // PerformedStationAETitle
    (0x0040, 0x0242, Vr::SH), // PerformedStationName
    (0x0040, 0x0243, Vr::SH), // PerformedLocation
    (0x0040, 0x0244, Vr::DA), // PerformedProcedureStepStartDate
    (0x0040, 0x0245, Vr::TM), // PerformedProcedureStepStartTime
    (0x0040, 0x0250, Vr::DA), // PerformedProcedureStepEndDate
    (0x0040, 0x0251, Vr::TM), // PerformedProcedureStepEndTime
    (0x0040, 0x0253, Vr::SH), // PerformedProcedureStepID
    (0x0040, 0x0254, Vr::LO), // PerformedProcedureStepDescription
    (0x0040, 0x0275, Vr::SQ), // RequestAttributesSequence
    (0x0040, 0x0280, Vr::ST), // CommentsOnPerformedProcedureStep
    (0x0040, 0x0555, Vr::SQ), // AcquisitionContextSequence
    (0x0040, 0x1001, Vr::SH), // RequestedProcedureID
    (0x0040, 0x1004, Vr::LO), // PatientTransportArrangements
    (0x0040, 0x1005, Vr::LO), // RequestedProcedureLocation
    (0x0040, 0x1010, Vr::PN), // NamesOfIntendedRecipientsOfResults
    (0x0040, 0x1011, Vr::SQ), // IntendedRecipientsOfResultsIdentificationSequence
    (0x0040, 0x1102, Vr::ST), // PersonAddress
    (0x0040, 0x1103, Vr::LO), // PersonTelephoneNumbers
    (0x0040, 0x1400, Vr::LT), // RequestedProcedureComments
    (0x0040, 0x2001, Vr::LO), // ReasonForImagingServiceRequest
    (0x0040, 0x2008, Vr::PN), // OrderEnteredBy
    (0x0040, 0x2009, Vr::SH), // OrderEntererLocation
    (0x0040, 0x2010, Vr::SH), // OrderCallbackPhoneNumber
    (0x0040, 0x2400, Vr::LT), // ImagingServiceRequestComments
    (0x0040, 0x3001, Vr::LO), // ConfidentialityConstraintOnPatientDataDescription
    (0x0040, 0x4023, Vr::UI), // ReferencedGeneralPurposeSPSTransactionUID
    (0x0040, 0x4025, Vr::SQ), // ScheduledStationNameCodeSequence
    (0x0040, 0x4027, Vr::SQ), // ScheduledStationGeographicLocationCodeSequence
    (0x0040, 0x4030, Vr::SQ), // PerformedStationGeographicLocationCodeSequence
    (0x0040, 0x4034, Vr::SQ), // ScheduledHumanPerformersSequence
    (0x0040, 0x4035, Vr::SQ), // ActualHumanPerformersSequence
    (0x0040, 0x4036, Vr::LO), // HumanPerformerOrganization
    (0x0040, 0x4037, Vr::PN), // HumanPerformerName
    (0x0040, 0xA073, Vr::SQ), // VerifyingObserverSequence
    (0x0040, 0xA075, Vr::PN), // VerifyingObserverName
    (0x0040, 0xA088, Vr::SQ), // VerifyingObserverIdentificationCodeSequence
    (0x0040, 0xA123, Vr::PN), // PersonName
    (0x0040, 0xA124, Vr::UI), // UID
    (0x0040, 0xA730, Vr::SQ), // ContentSequence
    (0x0070, 0x031A, Vr::UI), // FiducialUID
    (0x0088, 0x0140, Vr::UI), // StorageMediaFileSetUID
    (0x0088, 0x0200, Vr::SQ), // IconImageSequence
    (0x0088, 0x0904, Vr::LO), // TopicTitle
    (0x0088, 0x0906, Vr::LO), // TopicSubject
    (0x0088, 0x0910, Vr::LO), // TopicAuthor
    (0x0088, 0x0912, Vr::LO), // TopicKeywords
    (0x0400, 0x0100, Vr::UI), // DigitalSignatureUID
    (0x0400, 0x0402, Vr::SQ), // ReferencedDigitalSignatureSequence
    (0x0400, 0x0403, Vr::SQ), // ReferencedSOPInstanceMACSequence
    (0x0400, 0x0404, Vr::OB), // MAC
    (0x0400, 0x0550, Vr::SQ), // ModifiedAttributesSequence
    (0x0400, 0x0561, Vr::SQ), // OriginalAttributesSequence
    (0x2030, 0x0020, Vr::LO), // TextString
    (0x3006, 0x0024, Vr::UI), // ReferencedFrameOfReferenceUID
    (0x3006, 0x00C2, Vr::UI), // RelatedFrameOfReferenceUID
    (0x300E, 0x0008, Vr::PN), // ReviewerName
    (0x4000, 0x0010, Vr::LT), // Arbitrary
    (0x4000, 0x4000, Vr::LT), // TextComments
    (0x4008, 0x0042, Vr::LO), // ResultsIDIssuer
    (0x4008, 0x0102, Vr::PN), // InterpretationRecorder
    (0x4008, 0x010A, Vr::PN), // InterpretationTranscriber
    (0x4008, 0x010B, Vr::ST), // InterpretationText
    (0x4008, 0x010C, Vr::PN), // InterpretationAuthor
    (0x4008, 0x0111, Vr::SQ), // InterpretationApproverSequence
    (0x4008, 0x0114, Vr::PN), // PhysicianApprovingInterpretation
    (0x4008, 0x0115, Vr::LT), // InterpretationDiagnosisDescription
    (0x4008, 0x0118, Vr::SQ), // ResultsDistributionListSequence
    (0x4008, 0x0119, Vr::PN), // DistributionName
    (0x4008, 0x011A, Vr::LO), // DistributionAddress
    (0x4008, 0x0202, Vr::LO), // InterpretationIDIssuer
    (0x4008, 0x0300, Vr::ST), // Impressions
    (0x4008, 0x4000, Vr::ST), // ResultsComments
    (0x7FE0, 0x0010, Vr::OW), // PixelData
];

/// VR for a tag, as far as this dictionary knows. Unknown tags are UN.
pub fn vr_for_tag(tag: Tag) -> Vr {
    if tag.is_group_length() {
        return Vr::UL;
    }
    if let Ok(i) = TABLE.binary_search_by(|&(g, e, _)| (g, e).cmp(&(tag.group, tag.element))) {
        return TABLE[i].2;
    }
    // Repeating groups: overlays and retired curves.
    if tag.group & 0xFF00 == 0x6000 {
        match tag.element {
            0x3000 => return Vr::OW,
            0x4000 => return Vr::LT,
            0x0022 => return Vr::LO,
            _ => {}
        }
    }
    Vr::UN
}
