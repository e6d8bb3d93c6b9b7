package com.example.verification.model;

public class TanRequest {
    private String registrationToken;
    private String responsePadding;
}
